#pragma once

#include "symdyn/error.hpp"

#include <optional>

// Kind of the symdyn::Error thrown by f, or nullopt when nothing is thrown.
template <typename F>
std::optional<symdyn::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const symdyn::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

#include "symdyn/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstring>
#include <limits>

namespace symdyn::kernels {

std::uint32_t lcp(Text a, Text b, std::uint32_t cap) {
    const std::size_t lim = std::min<std::size_t>({a.size(), b.size(), cap});
    std::size_t i = 0;
    while (i < lim && a[i] == b[i]) ++i;
    return static_cast<std::uint32_t>(i);
}

std::vector<std::uint32_t> run_lengths(Text text, Symbol symbol) {
    std::vector<std::uint32_t> out(text.size() + 1, 0);
    for (std::size_t i = text.size(); i-- > 0;)
        out[i] = text[i] == symbol ? out[i + 1] + 1 : 0;
    out.pop_back();
    return out;
}

namespace {

Text image(const SampleSet& set, const Sample& s, std::size_t n) {
    return set.texts[s.source].subspan(s.offset + n);
}

Text tail(Text t, std::size_t i) { return i <= t.size() ? t.subspan(i) : Text{}; }

bool starts_with(Text t, Text p) { return t.size() >= p.size() && std::equal(p.begin(), p.end(), t.begin()); }

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Better entry for the per-dU reduction: larger need, then earlier time.
bool better(const NeedEntry& a, const NeedEntry& b) {
    if (a.violated != b.violated) return a.violated;
    if (!a.violated) return false;
    if (a.need != b.need) return a.need > b.need;
    return a.time < b.time;
}

}  // namespace

namespace serial {

std::vector<std::uint32_t> lcp_profile(Text text, Text reference, std::uint32_t cap) {
    std::vector<std::uint32_t> out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) out[i] = lcp(text.subspan(i), reference, cap);
    return out;
}

HitWitnesses hits(const SampleSet& set, Text pattern, std::size_t horizon) {
    HitWitnesses out(horizon + 1);
    for (std::size_t n = 1; n <= horizon; ++n)
        for (const auto& s : set.samples)
            if (starts_with(image(set, s, n), pattern)) {
                out[n] = s;
                break;
            }
    return out;
}

SplitWitnesses splits(const SampleSet& set, std::size_t k, std::size_t horizon) {
    SplitWitnesses out(horizon + 1);
    const auto& ss = set.samples;
    for (std::size_t n = 1; n <= horizon; ++n) {
        for (std::size_t i = 0; i < ss.size() && !out[n]; ++i)
            for (std::size_t j = i + 1; j < ss.size(); ++j) {
                Text a = image(set, ss[i], n).first(k), b = image(set, ss[j], n).first(k);
                if (!std::equal(a.begin(), a.end(), b.begin())) {
                    out[n] = std::make_pair(ss[i], ss[j]);
                    break;
                }
            }
    }
    return out;
}

std::vector<NeedEntry> pair_needs(const PairProblem& p) {
    const SampleSet& set = *p.set;
    const std::uint32_t cap = std::max(p.levels, p.o_depth);
    std::vector<NeedEntry> out(p.levels + 1);
    for (std::uint32_t d = 1; d <= p.levels; ++d) {
        for (std::size_t n = 1; n <= p.horizon; ++n) {
            std::uint32_t violator = kNone, top = 0, top_at = kNone;
            for (std::uint32_t s = 0; s < set.samples.size(); ++s) {
                if (p.level[s] < d) continue;
                std::uint32_t a = lcp(image(set, set.samples[s], n), p.reference, cap);
                if (a < p.o_depth && violator == kNone) violator = s;
                if (top_at == kNone || a > top) top = a, top_at = s;
            }
            if (violator == kNone) continue;
            NeedEntry e;
            e.violated = true;
            e.time = n;
            e.violator = violator;
            if (p.trigger_text) {
                e.need = lcp(tail(*p.trigger_text, n), p.reference, cap);
            } else {
                e.need = top;
                e.trigger = top_at;
            }
            if (e.need == 0) continue;  // no V of depth >= 1 is triggered
            if (better(e, out[d])) out[d] = e;
        }
    }
    return out;
}

std::vector<ZeroViolation> zero_block_violations(Text x, Text y, const std::vector<std::uint64_t>& offsets,
                                                 std::size_t n, std::size_t horizon) {
    std::vector<ZeroViolation> out;
    auto zeros = [n](Text t) { return t.size() >= n && std::all_of(t.begin(), t.begin() + n, [](Symbol s) { return s == 0; }); };
    for (std::size_t l = 1; l <= horizon; ++l) {
        if (!zeros(tail(x, l))) continue;
        for (auto j : offsets)
            if (!zeros(tail(y, j + l))) out.push_back({l, j});
    }
    return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> lcp_profile(Text text, Text reference, std::uint32_t cap) {
    std::vector<std::uint32_t> out(text.size());
    const std::int64_t size = static_cast<std::int64_t>(text.size());
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t i = 0; i < size; ++i) out[i] = lcp(text.subspan(i), reference, cap);
    return out;
}

HitWitnesses hits(const SampleSet& set, Text pattern, std::size_t horizon) {
    std::vector<std::vector<std::uint32_t>> prof(set.texts.size());
    const auto need = static_cast<std::uint32_t>(pattern.size());
    for (std::size_t i = 0; i < set.texts.size(); ++i) prof[i] = lcp_profile(set.texts[i], pattern, need);

    HitWitnesses out(horizon + 1);
    const std::int64_t h = static_cast<std::int64_t>(horizon);
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 1; n <= h; ++n)
        for (const auto& s : set.samples)
            if (prof[s.source][s.offset + n] >= need) {
                out[n] = s;
                break;
            }
    return out;
}

SplitWitnesses splits(const SampleSet& set, std::size_t k, std::size_t horizon) {
    // Any two images differ iff some image differs from the first one, and the
    // lexicographically first differing pair then starts with sample 0.
    SplitWitnesses out(horizon + 1);
    const auto& ss = set.samples;
    if (ss.size() < 2) return out;
    const std::int64_t h = static_cast<std::int64_t>(horizon);
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 1; n <= h; ++n) {
        const Symbol* a = image(set, ss[0], n).data();
        for (std::size_t j = 1; j < ss.size(); ++j)
            if (std::memcmp(a, image(set, ss[j], n).data(), k) != 0) {
                out[n] = std::make_pair(ss[0], ss[j]);
                break;
            }
    }
    return out;
}

std::vector<NeedEntry> pair_needs(const PairProblem& p) {
    const SampleSet& set = *p.set;
    const std::uint32_t cap = std::max(p.levels, p.o_depth);
    const std::uint32_t D = p.levels;

    // lcp of every text position against the reference, computed once.
    std::vector<std::vector<std::uint32_t>> prof(set.texts.size());
    for (std::size_t i = 0; i < set.texts.size(); ++i) prof[i] = lcp_profile(set.texts[i], p.reference, cap);
    std::vector<std::uint32_t> trig;
    if (p.trigger_text) {
        trig.resize(p.horizon + 1);
        for (std::size_t n = 0; n <= p.horizon; ++n) trig[n] = lcp(tail(*p.trigger_text, n), p.reference, cap);
    }

    std::vector<NeedEntry> out(D + 1);
    const std::int64_t h = static_cast<std::int64_t>(p.horizon);
#pragma omp parallel
    {
        std::vector<NeedEntry> local(D + 1);
        std::vector<std::uint32_t> viol(D + 2), top(D + 2), top_at(D + 2);
#pragma omp for schedule(static) nowait
        for (std::int64_t n = 1; n <= h; ++n) {
            std::fill(viol.begin(), viol.end(), kNone);
            std::fill(top_at.begin(), top_at.end(), kNone);
            std::fill(top.begin(), top.end(), 0);
            for (std::uint32_t s = 0; s < set.samples.size(); ++s) {
                const auto& smp = set.samples[s];
                const std::uint32_t a = prof[smp.source][smp.offset + n];
                const std::uint32_t d = p.level[s];
                if (a < p.o_depth && viol[d] == kNone) viol[d] = s;
                if (top_at[d] == kNone || a > top[d]) top[d] = a, top_at[d] = s;
            }
            // Suffix-combine so index d covers all levels >= d; ties keep
            // the earlier sample.
            for (std::uint32_t d = D; d >= 1; --d) {
                viol[d] = std::min(viol[d], viol[d + 1]);
                if (top_at[d + 1] != kNone &&
                    (top_at[d] == kNone || top[d + 1] > top[d] || (top[d + 1] == top[d] && top_at[d + 1] < top_at[d])))
                    top[d] = top[d + 1], top_at[d] = top_at[d + 1];
                if (viol[d] == kNone) continue;
                NeedEntry e;
                e.violated = true;
                e.time = static_cast<std::uint64_t>(n);
                e.violator = viol[d];
                if (p.trigger_text) {
                    e.need = trig[n];
                } else {
                    e.need = top[d];
                    e.trigger = top_at[d];
                }
                if (e.need == 0) continue;
                if (better(e, local[d])) local[d] = e;
            }
        }
#pragma omp critical
        for (std::uint32_t d = 1; d <= D; ++d)
            if (better(local[d], out[d])) out[d] = local[d];
    }
    return out;
}

std::vector<ZeroViolation> zero_block_violations(Text x, Text y, const std::vector<std::uint64_t>& offsets,
                                                 std::size_t n, std::size_t horizon) {
    const auto zx = run_lengths(x.first(std::min(x.size(), horizon + n + 1)), 0);
    const auto zy = run_lengths(y, 0);
    const std::int64_t h = static_cast<std::int64_t>(horizon);
    // Static schedule hands each thread one contiguous block of times, so
    // concatenating the buffers in thread order keeps the serial order.
    std::vector<std::vector<ZeroViolation>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& buf = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t l = 1; l <= h; ++l) {
            if (static_cast<std::size_t>(l) >= zx.size() || zx[l] < n) continue;
            for (auto j : offsets) {
                const std::size_t q = j + static_cast<std::size_t>(l);
                if (q >= zy.size() || zy[q] < n) buf.push_back({static_cast<std::uint64_t>(l), j});
            }
        }
    }
    std::vector<ZeroViolation> out;
    for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace parallel

}  // namespace symdyn::kernels

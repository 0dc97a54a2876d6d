#include "partbij/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "partbij/bijection.hpp"
#include "partbij/errors.hpp"

namespace partbij {

namespace {

Partition from_part_list(std::vector<part_t> const& parts)
{
    std::vector<std::pair<part_t, mult_t>> entries;
    for (auto part : parts) {
        if (!entries.empty() && entries.back().first == part)
            ++entries.back().second;
        else
            entries.emplace_back(part, 1);
    }
    return Partition::from_entries(entries);
}

void check_cap(std::uint64_t n, std::uint64_t cap)
{
    if (n > cap)
        throw resource_limit("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

} // namespace

PartitionStream::PartitionStream(std::uint64_t n, std::uint64_t cap)
    : n_(n)
{
    check_cap(n, cap);
}

bool PartitionStream::advance()
{
    if (!started_) {
        started_ = true;
        if (n_ != 0)
            parts_.assign(1, n_);
        return true;
    }
    // Rightmost part larger than 1; everything after it is a run of 1s.
    auto pos = parts_.size();
    while (pos > 0 && parts_[pos - 1] == 1)
        --pos;
    if (pos == 0)
        return false;
    --pos;
    std::uint64_t rest = parts_.size() - pos; // the trailing 1s plus the unit taken off parts_[pos]
    const part_t x = --parts_[pos];
    parts_.resize(pos + 1);
    while (rest > 0) {
        auto chunk = std::min<std::uint64_t>(x, rest);
        parts_.push_back(chunk);
        rest -= chunk;
    }
    return true;
}

std::optional<Partition> PartitionStream::next()
{
    if (done_)
        return std::nullopt;
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return from_part_list(parts_);
}

std::vector<Partition> enumerate_partitions(std::uint64_t n, std::uint64_t cap)
{
    std::vector<Partition> out;
    PartitionStream stream(n, cap);
    while (auto pt = stream.next())
        out.push_back(std::move(*pt));
    return out;
}

std::uint64_t count_family(Params const& ps, Family f, std::uint64_t n, std::uint64_t cap)
{
    std::uint64_t count = 0;
    PartitionStream stream(n, cap);
    while (auto pt = stream.next())
        if (in_family(ps, f, *pt))
            ++count;
    return count;
}

VerificationRecord verify_weight(Params const& ps, std::uint64_t n, std::uint64_t cap)
{
    VerificationRecord rec;
    rec.n = n;

    std::vector<Partition> family_a;
    std::vector<Partition> family_b;
    PartitionStream stream(n, cap);
    while (auto pt = stream.next()) {
        if (in_A(ps, *pt))
            family_a.push_back(*pt);
        if (in_B(ps, *pt))
            family_b.push_back(std::move(*pt));
    }
    rec.count_a = family_a.size();
    rec.count_b = family_b.size();

    std::set<Partition> images;
    for (auto const& lam : family_a) {
        Partition mu;
        try {
            mu = forward(ps, lam);
        } catch (family_violation const&) {
            ++rec.membership_failures;
            continue;
        }
        if (!in_B(ps, mu))
            ++rec.membership_failures;
        if (mu.weight() != lam.weight())
            ++rec.weight_failures;
        try {
            if (inverse(ps, mu) != lam)
                ++rec.roundtrip_failures;
        } catch (family_violation const&) {
            ++rec.roundtrip_failures;
        }
        if (!images.insert(std::move(mu)).second)
            ++rec.collision_failures;
    }
    rec.image_size = images.size();

    for (auto const& mu : family_b) {
        try {
            auto lam = inverse(ps, mu);
            if (!in_A(ps, lam))
                ++rec.membership_failures;
            if (lam.weight() != mu.weight())
                ++rec.weight_failures;
            if (forward(ps, lam) != mu)
                ++rec.roundtrip_failures;
        } catch (family_violation const&) {
            ++rec.roundtrip_failures;
        }
    }
    return rec;
}

VerificationReport verify_bijection(Params const& ps, std::uint64_t n_max, unsigned jobs, std::uint64_t cap)
{
    check_cap(n_max, cap);
    VerificationReport report;
    report.params = ps;
    report.n_max = n_max;
    report.per_n.resize(n_max + 1);

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n_max + 1)));
    if (workers == 1) {
        for (std::uint64_t n = 0; n <= n_max; ++n)
            report.per_n[n] = verify_weight(ps, n, cap);
    } else {
        // Largest n first: those dominate the runtime.
        std::atomic<std::uint64_t> claimed{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (;;) {
                        auto idx = claimed.fetch_add(1);
                        if (idx > n_max)
                            return;
                        auto n = n_max - idx;
                        try {
                            report.per_n[n] = verify_weight(ps, n, cap);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                        }
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    report.pass = std::all_of(report.per_n.begin(), report.per_n.end(),
                              [](VerificationRecord const& r) { return r.ok(); });
    return report;
}

} // namespace partbij

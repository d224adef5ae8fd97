#include "pmforce/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pmforce {

namespace {

class HittingSetSearch {
public:
    explicit HittingSetSearch(std::span<const std::vector<int>> sets) : sets_(sets)
    {
        for (const auto& s : sets_) {
            if (s.empty())
                throw std::invalid_argument("hitting set family contains an empty set");
            elements_.insert(elements_.end(), s.begin(), s.end());
        }
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());

        members_.resize(elements_.size());
        positions_.resize(sets_.size());
        last_.resize(sets_.size());
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            for (int x : sets_[s]) {
                const auto p = position(x);
                positions_[s].push_back(p);
                members_[static_cast<std::size_t>(p)].push_back(static_cast<int>(s));
            }
            auto& pos = positions_[s];
            std::sort(pos.begin(), pos.end());
            pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
            last_[s] = pos.back();
        }
        for (auto& m : members_)
            m.erase(std::unique(m.begin(), m.end()), m.end());

        by_size_.resize(sets_.size());
        std::iota(by_size_.begin(), by_size_.end(), 0);
        std::stable_sort(by_size_.begin(), by_size_.end(), [&](int a, int b) {
            return positions_[static_cast<std::size_t>(a)].size() < positions_[static_cast<std::size_t>(b)].size();
        });
        hits_.assign(sets_.size(), 0);
        stamp_.assign(elements_.size(), 0);
    }

    std::vector<int> solve()
    {
        unhit_ = sets_.size();
        best_size_ = greedy_upper_bound() + 1;
        std::fill(hits_.begin(), hits_.end(), 0);
        descend(0);
        std::vector<int> out;
        for (int p : best_)
            out.push_back(elements_[static_cast<std::size_t>(p)]);
        return out;
    }

private:
    int position(int x) const
    {
        return static_cast<int>(std::lower_bound(elements_.begin(), elements_.end(), x) - elements_.begin());
    }

    std::size_t greedy_upper_bound()
    {
        std::size_t unhit = sets_.size();
        std::size_t picked = 0;
        while (unhit > 0) {
            std::size_t best_gain = 0;
            std::size_t best_pos = 0;
            for (std::size_t p = 0; p < members_.size(); ++p) {
                std::size_t gain = 0;
                for (int s : members_[p])
                    gain += hits_[static_cast<std::size_t>(s)] == 0 ? 1 : 0;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_pos = p;
                }
            }
            for (int s : members_[best_pos])
                if (hits_[static_cast<std::size_t>(s)]++ == 0)
                    --unhit;
            ++picked;
        }
        return picked;
    }

    // Disjoint unhit sets, restricted to undecided positions, each need their own element.
    std::size_t lower_bound(int from)
    {
        ++epoch_;
        std::size_t count = 0;
        for (int s : by_size_) {
            if (hits_[static_cast<std::size_t>(s)] != 0)
                continue;
            const auto& pos = positions_[static_cast<std::size_t>(s)];
            auto it = std::lower_bound(pos.begin(), pos.end(), from);
            bool free = true;
            for (auto jt = it; jt != pos.end(); ++jt)
                if (stamp_[static_cast<std::size_t>(*jt)] == epoch_) {
                    free = false;
                    break;
                }
            if (!free)
                continue;
            for (auto jt = it; jt != pos.end(); ++jt)
                stamp_[static_cast<std::size_t>(*jt)] = epoch_;
            ++count;
        }
        return count;
    }

    void descend(int p)
    {
        if (unhit_ == 0) {
            if (chosen_.size() < best_size_) {
                best_size_ = chosen_.size();
                best_ = chosen_;
            }
            return;
        }
        if (p == static_cast<int>(elements_.size()))
            return;
        if (chosen_.size() + lower_bound(p) >= best_size_)
            return;

        const auto& members = members_[static_cast<std::size_t>(p)];
        bool useful = false;
        bool skippable = true;
        for (int s : members) {
            if (hits_[static_cast<std::size_t>(s)] != 0)
                continue;
            useful = true;
            if (last_[static_cast<std::size_t>(s)] == p)
                skippable = false;
        }

        if (useful) {
            for (int s : members)
                if (hits_[static_cast<std::size_t>(s)]++ == 0)
                    --unhit_;
            chosen_.push_back(p);
            descend(p + 1);
            chosen_.pop_back();
            for (int s : members)
                if (--hits_[static_cast<std::size_t>(s)] == 0)
                    ++unhit_;
        }
        if (skippable)
            descend(p + 1);
    }

    std::span<const std::vector<int>> sets_;
    std::vector<int> elements_;
    std::vector<std::vector<int>> members_;   // position -> sets containing it
    std::vector<std::vector<int>> positions_; // set -> sorted positions
    std::vector<int> last_;
    std::vector<int> by_size_;
    std::vector<int> hits_;
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 0;
    std::size_t unhit_ = 0;
    std::vector<int> chosen_;
    std::vector<int> best_;
    std::size_t best_size_ = 0;
};

class IndependentFamilySearch {
public:
    explicit IndependentFamilySearch(const ConflictGraph& g)
        : g_(g), words_((static_cast<std::size_t>(g.size()) + 63) / 64)
    {
    }

    std::vector<int> solve()
    {
        std::vector<std::uint64_t> all(words_, 0);
        for (int i = 0; i < g_.size(); ++i)
            all[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
        descend(std::move(all));
        return best_;
    }

private:
    static bool empty(const std::vector<std::uint64_t>& set)
    {
        return std::all_of(set.begin(), set.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::size_t clique_cover(const std::vector<std::uint64_t>& set)
    {
        cliques_.clear();
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = set[w]; bits != 0; bits &= bits - 1) {
                const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
                const auto row = g_.row(v);
                bool placed = false;
                for (std::size_t k = 0; k + words_ <= cliques_.size(); k += words_) {
                    if ((cliques_[k + w] >> (v % 64) & 1) == 0)
                        continue;
                    for (std::size_t j = 0; j < words_; ++j)
                        cliques_[k + j] &= row[j];
                    placed = true;
                    break;
                }
                if (!placed)
                    cliques_.insert(cliques_.end(), row.begin(), row.end());
            }
        }
        return cliques_.size() / std::max<std::size_t>(words_, 1);
    }

    void descend(std::vector<std::uint64_t> candidates)
    {
        if (empty(candidates)) {
            if (!found_ || chosen_.size() > best_.size()) {
                best_ = chosen_;
                found_ = true;
            }
            return;
        }
        if (found_ && chosen_.size() + clique_cover(candidates) <= best_.size())
            return;

        std::size_t w = 0;
        while (candidates[w] == 0)
            ++w;
        const int v = static_cast<int>(w * 64) + std::countr_zero(candidates[w]);
        candidates[w] &= candidates[w] - 1;

        std::vector<std::uint64_t> with = candidates;
        const auto row = g_.row(v);
        for (std::size_t j = 0; j < words_; ++j)
            with[j] &= ~row[j];
        chosen_.push_back(v);
        descend(std::move(with));
        chosen_.pop_back();
        descend(std::move(candidates));
    }

    const ConflictGraph& g_;
    std::size_t words_;
    std::vector<std::uint64_t> cliques_;
    std::vector<int> chosen_;
    std::vector<int> best_;
    bool found_ = false;
};

} // namespace

std::vector<int> min_hitting_set(std::span<const std::vector<int>> sets)
{
    if (sets.empty())
        return {};
    return HittingSetSearch(sets).solve();
}

ConflictGraph::ConflictGraph(int n)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0)
{
}

void ConflictGraph::add(int a, int b)
{
    if (a == b)
        return;
    bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
    bits_[static_cast<std::size_t>(b) * words_ + static_cast<std::size_t>(a) / 64] |= std::uint64_t{1} << (a % 64);
}

bool ConflictGraph::conflicts(int a, int b) const
{
    return (bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] >> (b % 64) & 1) != 0;
}

std::span<const std::uint64_t> ConflictGraph::row(int a) const
{
    return {bits_.data() + static_cast<std::size_t>(a) * words_, words_};
}

std::vector<int> max_independent_family(const ConflictGraph& conflicts)
{
    return IndependentFamilySearch(conflicts).solve();
}

ConflictGraph overlap_conflicts(std::span<const std::vector<int>> sets)
{
    ConflictGraph g(static_cast<int>(sets.size()));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            const auto& x = sets[a];
            const auto& y = sets[b];
            auto i = x.begin();
            auto j = y.begin();
            while (i != x.end() && j != y.end()) {
                if (*i < *j)
                    ++i;
                else if (*j < *i)
                    ++j;
                else {
                    g.add(static_cast<int>(a), static_cast<int>(b));
                    break;
                }
            }
        }
    return g;
}

} // namespace pmforce

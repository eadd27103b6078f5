#include "wdf/opt.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdf {

namespace {

using Mask = std::uint32_t;

// Cells are numbered (key-1) + n*(time-1).
class Grid {
public:
    Grid(Key n, Time m) : n_(n), cells_(static_cast<int>(n) * m), rect_(static_cast<std::size_t>(cells_ * cells_), 0)
    {
        for (int a = 0; a < cells_; ++a) {
            for (int b = a + 1; b < cells_; ++b) {
                const int ka = a % n_, ta = a / n_, kb = b % n_, tb = b / n_;
                if (ka == kb || ta == tb) continue;
                Mask m = 0;
                for (int c = 0; c < cells_; ++c) {
                    const int kc = c % n_, tc = c / n_;
                    if (kc >= std::min(ka, kb) && kc <= std::max(ka, kb) && tc >= std::min(ta, tb) &&
                        tc <= std::max(ta, tb))
                        m |= Mask{1} << c;
                }
                rect_[static_cast<std::size_t>(a * cells_ + b)] = m;
            }
        }
    }

    int cells() const noexcept { return cells_; }

    bool satisfied(Mask set) const
    {
        for (Mask rest = set; rest;) {
            const int a = std::countr_zero(rest);
            rest &= rest - 1;
            for (Mask others = rest; others;) {
                const int b = std::countr_zero(others);
                others &= others - 1;
                const Mask r = rect_[static_cast<std::size_t>(a * cells_ + b)];
                if (r != 0 && std::popcount(set & r) < 3) return false;
            }
        }
        return true;
    }

private:
    int n_;
    int cells_;
    std::vector<Mask> rect_;
};

} // namespace

OptResult opt_satisfied_superset(const AccessSequence& seq)
{
    if (seq.n() > kOptMaxKeys || seq.size() > kOptMaxAccesses)
        throw Error(Errc::TooLarge, "exact optimum needs n <= 5 and m <= 5");

    const Key n = seq.n();
    const auto m = static_cast<Time>(seq.size());
    const Grid grid(n, m);

    Mask base = 0;
    for (Time t = 1; t <= m; ++t) base |= Mask{1} << ((seq[static_cast<std::size_t>(t - 1)] - 1) + n * (t - 1));

    std::vector<int> free;
    for (int c = 0; c < grid.cells(); ++c)
        if (!(base >> c & 1)) free.push_back(c);

    const int slots = static_cast<int>(free.size());
    for (int k = 0; k <= slots; ++k) {
        std::vector<int> comb(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            Mask set = base;
            for (int i : comb) set |= Mask{1} << free[static_cast<std::size_t>(i)];
            if (grid.satisfied(set)) {
                OptResult result;
                result.size = static_cast<std::size_t>(std::popcount(set));
                for (int c = 0; c < grid.cells(); ++c)
                    if (set >> c & 1) result.witness.insert({c % n + 1, c / n + 1});
                return result;
            }
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == slots - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw std::logic_error("opt_satisfied_superset: full grid not satisfied");
}

} // namespace wdf

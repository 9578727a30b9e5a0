#include "calab/free_complex.hpp"

#include <sstream>

namespace calab {

const std::vector<int> FreeComplex::kNoDegrees;

Vec apply_columns(const QRingPtr& ring, const std::vector<Vec>& cols, const Vec& v, int target_rank) {
    Vec out = vec_zero(ring->ambient(), target_rank);
    if (cols.size() != v.size()) throw std::invalid_argument("column count / vector length mismatch");
    for (size_t j = 0; j < cols.size(); ++j) {
        if (v[j].is_zero()) continue;
        out = vec_add(out, vec_times_poly(cols[j], v[j]));
    }
    for (auto& p : out) p = ring->normal_form(p);
    return out;
}

FreeComplex FreeComplex::make(QRingPtr ring, int lo, std::vector<Level> levels) {
    // trim zero levels at both ends
    while (!levels.empty() && levels.front().rank == 0) {
        levels.erase(levels.begin());
        if (!levels.empty()) levels.front().diff.clear();
        ++lo;
    }
    while (!levels.empty() && levels.back().rank == 0) levels.pop_back();

    FreeComplex X;
    X.ring_ = std::move(ring);
    X.lo_ = lo;
    X.levels_ = std::move(levels);

    for (size_t k = 0; k < X.levels_.size(); ++k) {
        auto& L = X.levels_[k];
        if (L.degrees.empty()) L.degrees.assign(L.rank, 0);
        if (static_cast<int>(L.degrees.size()) != L.rank)
            throw std::invalid_argument("degree list does not match rank");
        if (k == 0) {
            L.diff.clear();
            continue;
        }
        if (static_cast<int>(L.diff.size()) != L.rank)
            throw std::invalid_argument("differential column count does not match rank");
        int below = X.levels_[k - 1].rank;
        for (auto& col : L.diff) {
            if (static_cast<int>(col.size()) != below)
                throw std::invalid_argument("differential column has wrong length");
            for (auto& p : col) p = X.ring_->normal_form(p);
        }
    }

    // d∘d = 0, checked over R
    for (size_t k = 2; k < X.levels_.size(); ++k) {
        const auto& upper = X.levels_[k].diff;
        const auto& lower = X.levels_[k - 1].diff;
        int target = X.levels_[k - 2].rank;
        for (const auto& col : upper) {
            Vec image = apply_columns(X.ring_, lower, col, target);
            if (!vec_is_zero(image))
                throw std::invalid_argument("differentials do not compose to zero");
        }
    }
    return X;
}

FreeComplex FreeComplex::module_in_degree_zero_free(const QRingPtr& ring, int rank) {
    Level L;
    L.rank = rank;
    return make(ring, 0, {L});
}

FreeComplex FreeComplex::zero_complex(QRingPtr ring) { return make(std::move(ring), 0, {}); }

int FreeComplex::rank(int i) const {
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(levels_.size())) return 0;
    return levels_[k].rank;
}

const std::vector<int>& FreeComplex::degrees(int i) const {
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(levels_.size())) return kNoDegrees;
    return levels_[k].degrees;
}

std::vector<Vec> FreeComplex::differential(int i) const {
    int k = i - lo_;
    if (k <= 0 || k >= static_cast<int>(levels_.size())) return {};
    return levels_[k].diff;
}

std::string FreeComplex::describe() const {
    std::ostringstream out;
    out << "[" << lo() << ".." << hi() << "] ranks";
    for (const auto& L : levels_) out << " " << L.rank;
    return out.str();
}

FreeComplex koszul_complex(const QRingPtr& ring, const std::vector<Polynomial>& elements) {
    if (elements.empty()) throw std::invalid_argument("Koszul complex needs at least one element");
    const RingPtr& S = ring->ambient();
    for (const auto& x : elements)
        if (!x.ring()->same_as(*S)) throw std::invalid_argument("Koszul element from a different ring");
    int n = static_cast<int>(elements.size());

    // basis of K_i: i-subsets of {0..n-1} encoded as bitmasks, listed in
    // increasing mask order
    std::vector<std::vector<unsigned>> subsets(n + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        subsets[__builtin_popcount(mask)].push_back(mask);
    std::vector<std::vector<int>> index_of(n + 1);  // mask -> position
    for (int i = 0; i <= n; ++i) {
        index_of[i].assign(1u << n, -1);
        for (size_t k = 0; k < subsets[i].size(); ++k) index_of[i][subsets[i][k]] = static_cast<int>(k);
    }

    std::vector<int> elt_degree(n, 0);
    bool graded = true;
    for (int j = 0; j < n; ++j) {
        auto d = elements[j].homogeneous_degree();
        if (d)
            elt_degree[j] = *d;
        else
            graded = false;
    }

    std::vector<FreeComplex::Level> levels(n + 1);
    for (int i = 0; i <= n; ++i) {
        levels[i].rank = static_cast<int>(subsets[i].size());
        for (unsigned mask : subsets[i]) {
            int deg = 0;
            if (graded)
                for (int j = 0; j < n; ++j)
                    if (mask & (1u << j)) deg += elt_degree[j];
            levels[i].degrees.push_back(deg);
        }
        if (i == 0) continue;
        for (unsigned mask : subsets[i]) {
            Vec col = vec_zero(S, levels[i - 1].rank);
            int sign_pos = 0;
            for (int j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                unsigned sub = mask & ~(1u << j);
                Scalar s = Scalar::of_int(sign_pos % 2 == 0 ? 1 : -1, S->field());
                col[index_of[i - 1][sub]] =
                    col[index_of[i - 1][sub]] + elements[j].scaled(s);
                ++sign_pos;
            }
            levels[i].diff.push_back(std::move(col));
        }
    }
    return FreeComplex::make(ring, 0, std::move(levels));
}

FreeComplex tensor_complexes(const FreeComplex& X, const FreeComplex& Y) {
    if (!X.ring()->same_as(*Y.ring())) throw std::invalid_argument("tensor of complexes over different rings");
    const QRingPtr& R = X.ring();
    const RingPtr& S = R->ambient();
    if (X.empty() || Y.empty()) return FreeComplex::zero_complex(R);

    int lo = X.lo() + Y.lo(), hi = X.hi() + Y.hi();

    // flattened index of (x_gen a in X_i, y_gen b in Y_{n-i}) inside level n:
    // blocks ordered by ascending i
    auto block_offset = [&](int n, int i) {
        int off = 0;
        for (int k = X.lo(); k < i; ++k) off += X.rank(k) * Y.rank(n - k);
        return off;
    };

    std::vector<FreeComplex::Level> levels;
    for (int n = lo; n <= hi; ++n) {
        FreeComplex::Level L;
        for (int i = X.lo(); i <= X.hi(); ++i) {
            int j = n - i;
            if (Y.rank(j) == 0 || X.rank(i) == 0) continue;
            for (int a = 0; a < X.rank(i); ++a)
                for (int b = 0; b < Y.rank(j); ++b)
                    L.degrees.push_back(X.degrees(i)[a] + Y.degrees(j)[b]);
        }
        L.rank = static_cast<int>(L.degrees.size());
        levels.push_back(std::move(L));
    }

    for (int n = lo + 1; n <= hi; ++n) {
        auto& L = levels[n - lo];
        int below_rank = levels[n - 1 - lo].rank;
        for (int i = X.lo(); i <= X.hi(); ++i) {
            int j = n - i;
            if (X.rank(i) == 0 || Y.rank(j) == 0) continue;
            auto dX = X.differential(i);
            auto dY = Y.differential(j);
            for (int a = 0; a < X.rank(i); ++a) {
                for (int b = 0; b < Y.rank(j); ++b) {
                    Vec col = vec_zero(S, below_rank);
                    // dX⊗id : lands in block (i-1, j)
                    if (!dX.empty() && X.rank(i - 1) > 0) {
                        int off = block_offset(n - 1, i - 1);
                        for (int t = 0; t < X.rank(i - 1); ++t) {
                            const Polynomial& entry = dX[a][t];
                            if (entry.is_zero()) continue;
                            int idx = off + t * Y.rank(j) + b;
                            col[idx] = col[idx] + entry;
                        }
                    }
                    // (-1)^i id⊗dY : lands in block (i, j-1)
                    if (!dY.empty() && Y.rank(j - 1) > 0) {
                        int off = block_offset(n - 1, i);
                        Scalar sign = Scalar::of_int(i % 2 == 0 ? 1 : -1, S->field());
                        for (int t = 0; t < Y.rank(j - 1); ++t) {
                            const Polynomial& entry = dY[b][t];
                            if (entry.is_zero()) continue;
                            int idx = off + a * Y.rank(j - 1) + t;
                            col[idx] = col[idx] + entry.scaled(sign);
                        }
                    }
                    L.diff.push_back(std::move(col));
                }
            }
        }
    }
    return FreeComplex::make(R, lo, std::move(levels));
}

FreeComplex shift_complex(const FreeComplex& X, int n) {
    if (X.empty()) return X;
    std::vector<FreeComplex::Level> levels;
    Scalar sign = Scalar::of_int(n % 2 == 0 ? 1 : -1, X.ring()->ambient()->field());
    for (int i = X.lo(); i <= X.hi(); ++i) {
        FreeComplex::Level L;
        L.rank = X.rank(i);
        L.degrees = X.degrees(i);
        for (const auto& col : X.differential(i)) L.diff.push_back(vec_scaled(col, sign));
        levels.push_back(std::move(L));
    }
    return FreeComplex::make(X.ring(), X.lo() + n, std::move(levels));
}

}  // namespace calab

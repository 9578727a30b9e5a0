#pragma once

#include "calab/groebner.hpp"
#include "calab/quotient_ring.hpp"

namespace calab {

/// Bounded complex of free R-modules with homological differentials
/// d_i : X_i -> X_{i-1}. Differentials are stored column-wise (one Vec in
/// R^{rank_{i-1}} per generator of X_i), entries reduced mod the defining
/// ideal. Construction verifies d∘d = 0 over R.
class FreeComplex {
public:
    struct Level {
        int rank = 0;
        std::vector<int> degrees;     // generator degrees (graded bookkeeping)
        std::vector<Vec> diff;        // differential into the level below; empty at lo
    };

    static FreeComplex make(QRingPtr ring, int lo, std::vector<Level> levels);
    static FreeComplex module_in_degree_zero_free(const QRingPtr& ring, int rank);
    static FreeComplex zero_complex(QRingPtr ring);

    const QRingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(levels_.size()) - 1; }
    bool empty() const { return levels_.empty(); }

    int rank(int i) const;
    const std::vector<int>& degrees(int i) const;
    /// Columns of d_i : X_i -> X_{i-1}; empty when i is out of range or i == lo.
    std::vector<Vec> differential(int i) const;

    std::string describe() const;

private:
    FreeComplex() = default;
    QRingPtr ring_;
    int lo_ = 0;
    std::vector<Level> levels_;

    static const std::vector<int> kNoDegrees;
};

/// Koszul complex on ring elements x_1..x_n, in degrees 0..n.
FreeComplex koszul_complex(const QRingPtr& ring, const std::vector<Polynomial>& elements);

/// Total tensor complex with the sign convention
/// d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db.
FreeComplex tensor_complexes(const FreeComplex& X, const FreeComplex& Y);

/// Reindexing X[n]_i = X_{i-n}, differentials scaled by (-1)^n.
FreeComplex shift_complex(const FreeComplex& X, int n);

/// Matrix product helper: image of column v under the column matrix `cols`
/// (entries of v multiply the columns), reduced mod the defining ideal.
Vec apply_columns(const QRingPtr& ring, const std::vector<Vec>& cols, const Vec& v, int target_rank);

}  // namespace calab

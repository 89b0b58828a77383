#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropgb/poly.hpp"

namespace tropgb {

/// Backend and prime shared by every entry of a matrix (or generator list).
struct FieldContext {
    Backend backend = Backend::Exact;
    std::int64_t prime = 2;

    static FieldContext of(const Scalar& s) { return {s.backend(), s.prime()}; }

    Scalar zero() const {
        if (backend == Backend::Exact) return Scalar::exact_int(0, prime);
        return Scalar(CappedScalar::structural_zero(prime));
    }

    bool matches(const Scalar& s) const {
        return s.backend() == backend && s.prime() == prime;
    }
};

/// Row signature: the module position (multiplier monomial, generator index)
/// of the row's representation. Generator indices are 1-based.
struct Signature {
    Monomial mon;
    int index = 0;
};

/// Total signature order: index-major, then the monomial comparison of the
/// active order on unit-coefficient terms. Returns +1 when a > b.
int signature_compare(const Signature& a, const Signature& b,
                      const TropicalOrder& order);

/// Origin of a row: x^multiplier * f_(gen_index), 1-based generator index.
struct RowProvenance {
    int gen_index = 0;
    Monomial multiplier;
};

/// Dense matrix whose columns are labeled by the complete list of degree-d
/// monomials sorted decreasingly under the order. Rows may carry signatures
/// (strictly increasing down the matrix) and provenance records.
class MacaulayMatrix {
public:
    MacaulayMatrix(std::size_t nvars, std::int64_t degree, TropicalOrder order,
                   FieldContext ctx);

    std::size_t nvars() const { return nvars_; }
    std::int64_t degree() const { return degree_; }
    const TropicalOrder& order() const { return order_; }
    const FieldContext& context() const { return ctx_; }
    const std::vector<Monomial>& mon() const { return mon_; }
    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return mon_.size(); }

    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r][c]; }

    std::size_t col_of(const Monomial& m) const;

    bool has_signatures() const { return !sigs_.empty(); }
    const Signature& signature(std::size_t r) const { return sigs_[r]; }
    const RowProvenance& provenance(std::size_t r) const { return prov_[r]; }

    /// Appends poly_as_row(f); validates degree, backend uniformity, and
    /// (when signatures are in use) strict signature increase.
    void append_row(const HomogeneousPoly& f, RowProvenance prov,
                    std::optional<Signature> sig = std::nullopt);

    HomogeneousPoly row_as_poly(std::size_t r) const;
    std::vector<Scalar> poly_as_row(const HomogeneousPoly& f) const;

    /// Swaps two rows together with their provenance. Refused on matrices
    /// with signatures (their row order is fixed).
    void swap_rows(std::size_t a, std::size_t b);

    /// Debug dump, one header line plus one line per row.
    std::string dump(const std::vector<std::string>& vars) const;

private:
    std::size_t nvars_;
    std::int64_t degree_;
    TropicalOrder order_;
    FieldContext ctx_;
    std::vector<Monomial> mon_;
    std::vector<std::vector<Scalar>> entries_;
    std::vector<Signature> sigs_;
    std::vector<RowProvenance> prov_;
};

/// Context of a generator list; verifies backend/prime uniformity.
FieldContext context_of(const std::vector<HomogeneousPoly>& gens);

/// Mac_d(F): rows are the degree-d monomial multiples of the generators,
/// grouped by generator, multipliers increasing under the order. Generators
/// of degree > d contribute no rows.
MacaulayMatrix build_full_macaulay(const std::vector<HomogeneousPoly>& gens,
                                   std::int64_t degree, const TropicalOrder& order);

} // namespace tropgb

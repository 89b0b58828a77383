#include "tropgb/macaulay.hpp"

#include <algorithm>

namespace tropgb {

int signature_compare(const Signature& a, const Signature& b,
                      const TropicalOrder& order) {
    if (a.index != b.index) return a.index > b.index ? 1 : -1;
    return order.unit_term_cmp(a.mon, b.mon);
}

MacaulayMatrix::MacaulayMatrix(std::size_t nvars, std::int64_t degree,
                               TropicalOrder order, FieldContext ctx)
    : nvars_(nvars), degree_(degree), order_(std::move(order)), ctx_(ctx),
      mon_(enumerate_monomials(nvars, degree, order_)) {}

std::size_t MacaulayMatrix::col_of(const Monomial& m) const {
    for (std::size_t c = 0; c < mon_.size(); ++c)
        if (mon_[c] == m) return c;
    throw DomainError("monomial not among the column labels");
}

void MacaulayMatrix::append_row(const HomogeneousPoly& f, RowProvenance prov,
                                std::optional<Signature> sig) {
    if (!entries_.empty() && sig.has_value() != has_signatures())
        throw DomainError("signature usage must be uniform across rows");
    if (sig && has_signatures() &&
        signature_compare(*sig, sigs_.back(), order_) <= 0)
        throw DomainError("row signatures must be strictly increasing");
    entries_.push_back(poly_as_row(f));
    prov_.push_back(std::move(prov));
    if (sig) sigs_.push_back(std::move(*sig));
}

HomogeneousPoly MacaulayMatrix::row_as_poly(std::size_t r) const {
    HomogeneousPoly f(nvars_, degree_);
    for (std::size_t c = 0; c < mon_.size(); ++c) {
        if (!entries_[r][c].is_structural_zero()) f.add_term(mon_[c], entries_[r][c]);
    }
    return f;
}

std::vector<Scalar> MacaulayMatrix::poly_as_row(const HomogeneousPoly& f) const {
    if (f.degree() != degree_ || f.nvars() != nvars_)
        throw DomainError("polynomial does not match matrix degree");
    std::vector<Scalar> row(mon_.size(), ctx_.zero());
    for (const auto& [m, c] : f.terms()) {
        if (!ctx_.matches(c)) throw BackendError("mixed backends in one matrix");
        row[col_of(m)] = c;
    }
    return row;
}

void MacaulayMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (has_signatures())
        throw DomainError("cannot reorder rows of a signed matrix");
    std::swap(entries_[a], entries_[b]);
    std::swap(prov_[a], prov_[b]);
}

std::string MacaulayMatrix::dump(const std::vector<std::string>& vars) const {
    std::string out = "mon:";
    for (const auto& m : mon_) out += " " + m.str(vars);
    out += "\n";
    for (std::size_t r = 0; r < rows(); ++r) {
        if (has_signatures())
            out += "sig=(" + sigs_[r].mon.str(vars) + "," +
                   std::to_string(sigs_[r].index) + ") | ";
        out += "prov=" + prov_[r].multiplier.str(vars) + "*f_" +
               std::to_string(prov_[r].gen_index) + " |";
        for (std::size_t c = 0; c < cols(); ++c) out += " " + entries_[r][c].str();
        out += "\n";
    }
    return out;
}

FieldContext context_of(const std::vector<HomogeneousPoly>& gens) {
    const Scalar* first = nullptr;
    for (const auto& g : gens) {
        for (const auto& [m, c] : g.terms()) {
            if (first == nullptr) first = &c;
            if (c.backend() != first->backend() || c.prime() != first->prime())
                throw BackendError("generators mix scalar backends or primes");
        }
    }
    if (first == nullptr)
        throw DomainError("cannot infer scalar backend: no coefficients");
    return FieldContext::of(*first);
}

MacaulayMatrix build_full_macaulay(const std::vector<HomogeneousPoly>& gens,
                                   std::int64_t degree, const TropicalOrder& order) {
    if (gens.empty()) throw DomainError("empty generator list");
    std::size_t nvars = gens.front().nvars();
    MacaulayMatrix M(nvars, degree, order, context_of(gens));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const HomogeneousPoly& f = gens[i];
        if (f.is_zero()) throw DomainError("zero polynomial among the generators");
        if (f.nvars() != nvars) throw DomainError("generators over different rings");
        if (f.degree() > degree) continue;
        std::vector<Monomial> mult = enumerate_monomials(nvars, degree - f.degree(), order);
        std::reverse(mult.begin(), mult.end()); // increasing order
        for (const Monomial& m : mult)
            M.append_row(f.multiply_by_monomial(m), {static_cast<int>(i) + 1, m});
    }
    return M;
}

} // namespace tropgb

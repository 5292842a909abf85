#include "nilharm/catalog.hpp"

#include "nilharm/errors.hpp"

namespace nilharm {

LieAlgebra heisenberg3(int extra_central) {
    int n = 3 + extra_central;
    std::vector<std::string> names = {"X1", "X2", "X3"};
    for (int k = 1; k <= extra_central; ++k) names.push_back("W" + std::to_string(k));
    return build_algebra(n, names, {{3, 2, {{1, Rational(1)}}}});
}

LieAlgebra filiform(int n) {
    // [X_n, X_i] = X_{i-1}, i = 2..n-1.
    std::vector<BracketSpec> brackets;
    for (int i = 2; i <= n - 1; ++i) brackets.push_back({n, i, {{i - 1, Rational(1)}}});
    return build_algebra(n, {}, brackets);
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"h3", "Heisenberg group of dimension 3; standard basis is strongly based", heisenberg3(0), false});
        for (int k = 1; k <= 3; ++k)
            v.push_back({"h3_r" + std::to_string(k),
                         "H3 x R^" + std::to_string(k) + "; the abelian ideal is not unique",
                         heisenberg3(k), false});
        for (int n = 4; n <= 7; ++n)
            v.push_back({"filiform" + std::to_string(n),
                         "generic filiform of dimension " + std::to_string(n) +
                             "; standard basis needs rescaling to carry a lattice",
                         filiform(n), true});
        return v;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw Error("unknown catalog example '" + name + "'");
}

PreparedAlgebra prepare(const LieAlgebra& g) {
    auto m = find_codim1_abelian_ideal(g);
    if (!m) throw NotMetabelianError();
    MalcevBasis mb = build_malcev_basis(g, *m);
    PreparedAlgebra out{mb, NilSetting{}, std::vector<Int>(size_t(g.n - 1), Int(1)), false};
    if (!is_strongly_based(mb)) {
        out.rescale = rescale_factors(mb);
        out.basis = rescale_to_integral(mb);
        out.rescaled = true;
        validate_strongly_based(out.basis);
    }
    out.setting = make_setting(out.basis);
    return out;
}

}  // namespace nilharm

#include <algorithm>
#include <cmath>
#include <map>

#include "splitkit/linalg.hpp"
#include "splitkit/schemes.hpp"

namespace splitkit {

int GeneratorSet::dim() const {
    if (generators.empty()) throw InvalidInputError("GeneratorSet: empty");
    const int n = generators.front().dim();
    for (const auto& g : generators)
        if (g.dim() != n) throw InvalidInputError("GeneratorSet: mixed dimensions");
    return n;
}

ComplexMatrix GeneratorSet::sum() const {
    ComplexMatrix m = ComplexMatrix::zero(dim());
    for (const auto& g : generators) m += g;
    return m;
}

namespace {

std::vector<cplx> conj_list(const std::vector<cplx>& v) {
    std::vector<cplx> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = std::conj(v[i]);
    return r;
}

// Compositions are written on paper in product order (leftmost factor acts
// last); stage storage is application order, so printed tuples get reversed.
std::vector<cplx> app_order(std::vector<cplx> product_order) {
    std::reverse(product_order.begin(), product_order.end());
    return product_order;
}

Composition make(const std::string& name, BasicMethodKind basic,
                 std::vector<cplx> stages_app_order, int order) {
    Composition c;
    c.name = name;
    c.basic = basic;
    c.stages = std::move(stages_app_order);
    c.nominal_order = order;
    c.tags = compute_tags(c);
    return c;
}

// Direct AC construction: the half-composition is given in product order;
// the full method is (a_1 ... a_r, conj a_1 ... conj a_r), conjugate part
// applied first.
Composition make_direct_ac(const std::string& name, std::vector<cplx> half_product_order,
                           int order, BasicMethodKind basic = BasicMethodKind::StrangSymmetric) {
    Composition half;
    half.basic = basic;
    half.stages = app_order(std::move(half_product_order));
    half.nominal_order = order;
    Composition full = alternate(half, false);
    full.name = name;
    full.nominal_order = order;
    return full;
}

std::map<std::string, Composition> build_catalog() {
    std::map<std::string, Composition> cat;
    const double sqrt3 = std::sqrt(3.0);

    cat["lt"] = make("lt", BasicMethodKind::LieTrotter, {cplx(1.0)}, 1);
    cat["strang"] = make("strang", BasicMethodKind::StrangSymmetric, {cplx(1.0)}, 2);

    // third order: Strang at gamma then conj(gamma), gamma = 1/2 + i sqrt(3)/6
    const cplx g3(0.5, 1.0 / (2.0 * sqrt3));
    cat["p3sc"] = make("p3sc", BasicMethodKind::StrangSymmetric,
                       app_order({g3, std::conj(g3)}), 3);

    // fourth order, palindromic: complex triple jump (principal branch)
    const cplx omega(-0.5, 0.5 * sqrt3);
    const cplx tj1 = cplx(1.0) / (cplx(2.0) - std::cbrt(2.0) * omega);
    const cplx tj2 = cplx(1.0) - 2.0 * tj1;
    cat["p4pal"] = make("p4pal", BasicMethodKind::StrangSymmetric,
                        app_order({tj1, tj2, tj1}), 4);

    // fourth order, symmetric-conjugate triple jump
    const cplx sc1(0.25, 0.25 * std::sqrt(5.0 / 3.0));
    cat["p4sc"] = make("p4sc", BasicMethodKind::StrangSymmetric,
                       app_order({sc1, cplx(0.5), std::conj(sc1)}), 4);

    // alternating-conjugate versions at half step
    {
        Composition c = alternate(cat["p3sc"], true);
        c.name = "ac4-s1";
        cat["ac4-s1"] = c;
        c = alternate(cat["p4pal"], true);
        c.name = "ac4-s2";
        cat["ac4-s2"] = c;
        c = alternate(cat["p4sc"], true);
        c.name = "ac4-s3";
        cat["ac4-s3"] = c;
    }

    // order 2: alternated Lie-Trotter, a = (1+i)/2
    cat["ac2"] = make_direct_ac("ac2", {cplx(0.5, 0.5)}, 2, BasicMethodKind::LieTrotter);

    // order 4 direct: (a, i conj a), a = (1+1/sqrt3)/4 + i (1-1/sqrt3)/4
    const cplx a4(0.25 * (1.0 + 1.0 / sqrt3), 0.25 * (1.0 - 1.0 / sqrt3));
    cat["ac4-new"] = make_direct_ac("ac4-new", {a4, cplx(0.0, 1.0) * std::conj(a4)}, 4);

    // order 5 direct, printed decimals
    cat["ac5-new"] = make_direct_ac(
        "ac5-new",
        {cplx(0.13073364974455472155, 0.0),
         cplx(0.10154067971150062704, 0.13578392847671735429),
         cplx(0.16195992616393787750, -0.05016739165848310348),
         cplx(0.10576574438000677391, 0.07684331129821891226)},
        5);

    // order 6 direct, printed decimals
    cat["ac6-new"] = make_direct_ac(
        "ac6-new",
        {cplx(0.051834036182240306862, 0.0),
         cplx(0.075584762328805037429, 0.068952097954972525370),
         cplx(0.126191199798221549793, -0.022451017530352466819),
         cplx(0.067883683573696296147, -0.098039677222465976320),
         cplx(0.099243916328147654969, 0.049312230362166446543),
         cplx(0.079262401788889154800, -0.041953102069126791785)},
        6);

    // symmetric-conjugate compositions of order 5 and 7
    {
        const cplx s1(0.17526840907207411405, 0.05761474413053870201);
        const cplx s2(0.18487368019298416043, -0.19412192275724958851);
        const cplx s3(0.27971582146988345102, 0.0);
        cat["sc5"] = make("sc5", BasicMethodKind::StrangSymmetric,
                          app_order({s1, s2, s3, std::conj(s2), std::conj(s1)}), 5);
    }
    {
        const cplx s1(0.05211820743645156337, -0.05814624289751311388);
        const cplx s2(0.10923197827620526541, 0.02935068872383690377);
        const cplx s3(0.09943629453321852209, -0.06231578289901792940);
        const cplx s4(0.08136441998830503070, 0.11683729387729571634);
        const cplx s5(0.14644914726793223517, 0.04299436701496493366);
        const cplx s6(0.02279990499577476650, 0.0);
        cat["sc7"] = make("sc7", BasicMethodKind::StrangSymmetric,
                          app_order({s1, s2, s3, s4, s5, s6, std::conj(s5), std::conj(s4),
                                     std::conj(s3), std::conj(s2), std::conj(s1)}),
                          7);
    }

    // alternated symmetric-conjugate compositions (odd order rises by one)
    {
        Composition c = alternate(cat["sc5"], true);
        c.name = "ac6-scsc";
        cat["ac6-scsc"] = c;
        c = alternate(cat["sc7"], true);
        c.name = "ac8-scsc";
        cat["ac8-scsc"] = c;
    }

    return cat;
}

const std::map<std::string, Composition>& catalog_map() {
    static const std::map<std::string, Composition> cat = build_catalog();
    return cat;
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "lt",      "strang",  "p3sc",    "p4pal",   "p4sc",    "ac4-s1",
        "ac4-s2",  "ac4-s3",  "ac2",     "ac4-new", "ac5-new", "ac6-new",
        "sc5",     "sc7",     "ac6-scsc", "ac8-scsc"};
    return names;
}

Composition catalog(const std::string& name) {
    const auto& cat = catalog_map();
    const auto it = cat.find(name);
    if (it == cat.end()) {
        std::string msg = "unknown scheme '" + name + "'; valid names:";
        for (const auto& n : catalog_names()) msg += " " + n;
        throw CatalogError(msg);
    }
    return it->second;
}

Composition conjugate_scheme(const Composition& c) {
    Composition r = c;
    r.stages = conj_list(c.stages);
    for (auto& row : r.rows) row = conj_list(row);
    r.tags = compute_tags(r);
    return r;
}

Composition alternate(const Composition& c, bool halve_step) {
    if (c.basic == BasicMethodKind::ExactStage)
        throw UnsupportedError("alternate: ExactStage compositions are not supported");
    Composition base = c;
    if (halve_step)
        for (auto& s : base.stages) s *= 0.5;
    Composition r;
    r.name = c.name.empty() ? std::string() : ("ac(" + c.name + ")");
    r.basic = c.basic;
    r.stages = conj_list(base.stages);
    r.stages.insert(r.stages.end(), base.stages.begin(), base.stages.end());
    r.nominal_order = c.nominal_order;
    if (is_symmetric_conjugate(c) && (c.nominal_order % 2 == 1))
        r.nominal_order = c.nominal_order + 1;
    r.tags = compute_tags(r);
    return r;
}

bool is_palindromic(const Composition& c, double tol) {
    const auto& s = c.stages;
    const size_t m = s.size();
    for (size_t i = 0; i < m; ++i)
        if (std::abs(s[i] - s[m - 1 - i]) > tol) return false;
    return !s.empty();
}

bool is_symmetric_conjugate(const Composition& c, double tol) {
    const auto& s = c.stages;
    const size_t m = s.size();
    for (size_t i = 0; i < m; ++i)
        if (std::abs(s[i] - std::conj(s[m - 1 - i])) > tol) return false;
    return !s.empty();
}

bool is_alternating_conjugate(const Composition& c, double tol) {
    const auto& s = c.stages;
    const size_t m = s.size();
    if (m == 0 || m % 2 != 0) return false;
    const size_t half = m / 2;
    for (size_t i = 0; i < half; ++i)
        if (std::abs(s[i + half] - std::conj(s[i])) > tol) return false;
    return true;
}

SymmetryTags compute_tags(const Composition& c, double tol) {
    SymmetryTags t;
    if (c.basic == BasicMethodKind::ExactStage) return t;
    t.palindromic = is_palindromic(c, tol);
    t.symmetric_conjugate = is_symmetric_conjugate(c, tol);
    t.alternating_conjugate = is_alternating_conjugate(c, tol);
    return t;
}

Composition psi_half(const Composition& c) {
    if (!is_alternating_conjugate(c))
        throw InvalidInputError("psi_half: composition is not alternating-conjugate");
    Composition r;
    r.name = c.name.empty() ? std::string() : (c.name + ":half");
    r.basic = c.basic;
    r.stages.assign(c.stages.begin() + static_cast<long>(c.stages.size() / 2), c.stages.end());
    r.nominal_order = c.nominal_order;
    r.tags = compute_tags(r);
    return r;
}

namespace {

// One application of the basic method at stage coefficient s.
ComplexMatrix basic_step(BasicMethodKind kind, cplx s, const GeneratorSet& g, double h) {
    const auto& gs = g.generators;
    const int m = static_cast<int>(gs.size());
    const cplx sh = s * h;
    if (kind == BasicMethodKind::LieTrotter) {
        ComplexMatrix p = expm(gs[0], sh);
        for (int j = 1; j < m; ++j) p = p * expm(gs[static_cast<size_t>(j)], sh);
        return p;
    }
    // Strang: half steps of the first m-1 operators around a full step of
    // the last, symmetric in the operator list.
    ComplexMatrix p = expm(gs[static_cast<size_t>(m - 1)], sh);
    for (int j = m - 2; j >= 0; --j) {
        const ComplexMatrix e = expm(gs[static_cast<size_t>(j)], 0.5 * sh);
        p = e * p * e;
    }
    return p;
}

} // namespace

ComplexMatrix propagator(const Composition& c, const GeneratorSet& g, double h) {
    const int n = g.dim();
    if (!std::isfinite(h)) throw InvalidInputError("propagator: non-finite step size");
    if (h == 0.0) return ComplexMatrix::identity(n);

    if (c.basic == BasicMethodKind::ExactStage) {
        if (c.rows.empty()) throw InvalidInputError("propagator: empty composition");
        const size_t m = g.generators.size();
        ComplexMatrix acc = ComplexMatrix::identity(n);
        for (const auto& row : c.rows) {
            if (row.size() != m)
                throw InvalidInputError("propagator: row width does not match generator count");
            ComplexMatrix rowmat = ComplexMatrix::identity(n);
            for (size_t j = 0; j < m; ++j) {
                if (row[j] == cplx(0.0)) continue;  // skipped slot, exact identity
                rowmat = rowmat * expm(g.generators[j], row[j] * h);
            }
            acc = rowmat * acc;
        }
        return acc;
    }

    if (c.stages.empty()) throw InvalidInputError("propagator: empty composition");
    // repeated stage values share one evaluation
    std::vector<cplx> keys;
    std::vector<ComplexMatrix> vals;
    ComplexMatrix acc = ComplexMatrix::identity(n);
    for (const cplx s : c.stages) {
        int found = -1;
        for (size_t k = 0; k < keys.size(); ++k)
            if (keys[k] == s) {
                found = static_cast<int>(k);
                break;
            }
        if (found < 0) {
            keys.push_back(s);
            vals.push_back(basic_step(c.basic, s, g, h));
            found = static_cast<int>(keys.size()) - 1;
        }
        acc = vals[static_cast<size_t>(found)] * acc;
    }
    return acc;
}

int stage_count(const Composition& c) {
    if (c.basic != BasicMethodKind::StrangSymmetric)
        throw UnsupportedError("stage_count: defined for StrangSymmetric compositions only");
    return static_cast<int>(c.stages.size());
}

long long lie_dimension(int n, int m) {
    if (n < 1 || m < 2) throw InvalidInputError("lie_dimension: need n >= 1, m >= 2");
    auto mobius = [](int d) {
        int mu = 1;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p == 0) {
                d /= p;
                if (d % p == 0) return 0;
                mu = -mu;
            }
        }
        if (d > 1) mu = -mu;
        return mu;
    };
    long long total = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        long long pw = 1;
        for (int k = 0; k < n / d; ++k) pw *= m;
        total += mu * pw;
    }
    return total / n;
}

cplx stage_sum(const Composition& c) {
    cplx s = 0.0;
    for (const auto& v : c.stages) s += v;
    return s;
}

cplx stage_cube_sum(const Composition& c) {
    cplx s = 0.0;
    for (const auto& v : c.stages) s += v * v * v;
    return s;
}

bool coefficients_equal(const Composition& a, const Composition& b, double tol) {
    if (a.basic != b.basic || a.stages.size() != b.stages.size() || a.rows.size() != b.rows.size())
        return false;
    for (size_t i = 0; i < a.stages.size(); ++i)
        if (std::abs(a.stages[i] - b.stages[i]) > tol) return false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].size() != b.rows[i].size()) return false;
        for (size_t j = 0; j < a.rows[i].size(); ++j)
            if (std::abs(a.rows[i][j] - b.rows[i][j]) > tol) return false;
    }
    return true;
}

} // namespace splitkit

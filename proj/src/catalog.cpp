#include "periodlab/catalog.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace periodlab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(trim(part));
    return out;
}

Poly parse_poly_list(const std::string& s) {
    std::vector<Rational> c;
    for (const auto& tok : split(s, ',')) c.push_back(parse_rational(tok));
    return Poly(std::move(c));
}

struct Catalog {
    std::map<std::string, FamilyRecord> families;
    std::map<std::string, MapSpec> maps;
    std::vector<std::string> family_order;
    std::vector<std::string> map_order;
};

Catalog load_catalog() {
    std::string path = std::string(PERIODLAB_DATA_DIR) + "/families.txt";
    std::ifstream in(path);
    if (!in) throw Error("CatalogUnavailable", "cannot open " + path);
    Catalog cat;
    FamilyRecord fam;
    MapSpec map;
    int mode = 0; // 0 none, 1 family, 2 mapspec
    std::string line;
    size_t matrix_dim = 0;
    Poly matrix_denom;
    std::vector<std::vector<Poly>> matrix_rows;
    auto flush = [&]() {
        if (mode == 1) {
            if (!matrix_rows.empty()) {
                RatFuncMatrix M(matrix_rows.size(), matrix_rows.size());
                for (size_t i = 0; i < matrix_rows.size(); ++i) {
                    if (matrix_rows[i].size() != matrix_rows.size())
                        throw Error("CatalogParse", "ragged matrix in " + fam.name);
                    for (size_t j = 0; j < matrix_rows[i].size(); ++j)
                        M(i, j) = RationalFunction(matrix_rows[i][j], matrix_denom);
                }
                fam.matrix = M;
            }
            cat.family_order.push_back(fam.name);
            cat.families[fam.name] = fam;
        } else if (mode == 2) {
            cat.map_order.push_back(map.name);
            cat.maps[map.name] = map;
        }
        fam = FamilyRecord();
        map = MapSpec();
        matrix_rows.clear();
        matrix_denom = Poly();
        matrix_dim = 0;
        mode = 0;
    };
    (void)matrix_dim;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto sp = t.find(' ');
        std::string key = sp == std::string::npos ? t : t.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(t.substr(sp + 1));
        if (key == "family") {
            flush();
            mode = 1;
            fam.name = rest;
        } else if (key == "mapspec") {
            flush();
            mode = 2;
            map.name = rest;
        } else if (key == "end") {
            flush();
        } else if (mode == 1) {
            if (key == "display") fam.display = rest;
            else if (key == "quad") {
                auto parts = split(rest, ' ');
                std::vector<std::string> toks;
                for (auto& p : parts)
                    if (!p.empty()) toks.push_back(p);
                if (toks.size() != 5) throw Error("CatalogParse", "quad needs 5 coefficients");
                for (size_t i = 0; i < 5; ++i) fam.quad[i] = parse_rational(toks[i]);
            } else if (key == "locus")
                fam.singular_locus = parse_poly_list(rest);
            else if (key == "matrix")
                matrix_denom = parse_poly_list(rest);
            else if (key == "row") {
                std::vector<Poly> row;
                for (const auto& e : split(rest, '|')) row.push_back(parse_poly_list(e));
                matrix_rows.push_back(row);
            } else if (key == "ode") {
                auto colon = rest.find(':');
                if (colon == std::string::npos) throw Error("CatalogParse", "ode needs a label");
                FamilyODE fo;
                fo.label = trim(rest.substr(0, colon));
                for (const auto& p : split(rest.substr(colon + 1), ';'))
                    fo.ode.coeffs.push_back(parse_poly_list(p));
                fo.ode = fo.ode.primitive();
                fam.odes.push_back(fo);
            } else if (key == "note")
                fam.notes.push_back(rest);
            else
                throw Error("CatalogParse", "unknown family key " + key);
        } else if (mode == 2) {
            if (key == "given") map.givens.push_back(rest);
            else if (key == "indep") map.indep = rest;
            else if (key == "radical") {
                auto parts = split(rest, ' ');
                std::vector<std::string> toks;
                for (auto& p : parts)
                    if (!p.empty()) toks.push_back(p);
                if (toks.size() < 3) throw Error("CatalogParse", "radical needs var, power, value");
                map.radical_var = toks[0];
                map.radical_power = std::stol(toks[1]);
                map.radical_value = toks[2];
                for (size_t i = 3; i < toks.size(); ++i) map.radical_value += toks[i];
            } else if (key == "def") {
                auto eq = rest.find('=');
                if (eq == std::string::npos) throw Error("CatalogParse", "def needs =");
                map.defs.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
            } else if (key == "check" || key == "checkfail") {
                auto colon = rest.find(':');
                if (colon == std::string::npos) throw Error("CatalogParse", "check needs a label");
                MapCheck mc;
                mc.label = trim(rest.substr(0, colon));
                mc.expression = trim(rest.substr(colon + 1));
                mc.expect_zero = key == "check";
                map.checks.push_back(mc);
            } else if (key == "note")
                map.notes.push_back(rest);
            else
                throw Error("CatalogParse", "unknown mapspec key " + key);
        } else
            throw Error("CatalogParse", "stray line: " + t);
    }
    flush();
    return cat;
}

const Catalog& catalog() {
    static Catalog cat = load_catalog();
    return cat;
}

} // namespace

const ScalarODE& FamilyRecord::ode(const std::string& label) const {
    std::string want = normalize_form_label(label);
    for (const auto& fo : odes)
        if (fo.label == want) return fo.ode;
    throw Error("UnknownForm", name + " has no differential form " + label);
}

bool FamilyRecord::has_ode(const std::string& label) const {
    std::string want = normalize_form_label(label);
    for (const auto& fo : odes)
        if (fo.label == want) return true;
    return false;
}

const std::vector<std::string>& catalog_names() { return catalog().family_order; }

const FamilyRecord& catalog_get(const std::string& name) {
    auto it = catalog().families.find(name);
    if (it == catalog().families.end()) throw Error("UnknownFamily", name);
    return it->second;
}

const std::vector<std::string>& mapspec_names() { return catalog().map_order; }

const MapSpec& mapspec_get(const std::string& name) {
    auto it = catalog().maps.find(name);
    if (it == catalog().maps.end()) throw Error("UnknownMapSpec", name);
    return it->second;
}

std::string normalize_form_label(const std::string& label) {
    std::string out;
    for (size_t i = 0; i < label.size();) {
        // "∇" (nabla) and "ω" (omega) in UTF-8
        if (label.compare(i, 3, "\xe2\x88\x87") == 0) {
            out += "nabla-";
            i += 3;
        } else if (label.compare(i, 2, "\xcf\x89") == 0) {
            out += "omega";
            i += 2;
        } else {
            char c = label[i++];
            if (c == '_' || c == '{' || c == '}' || c == ' ') continue;
            out += c;
        }
    }
    return out;
}

// ---- critical values ------------------------------------------------------

CriticalValueSet critical_values(const std::string& name, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    const FamilyRecord& fam = catalog_get(name);
    const Rational &c20 = fam.quad[0], &c11 = fam.quad[1], &c02 = fam.quad[2],
                   &c10 = fam.quad[3], &c01 = fam.quad[4];

    auto dedup = [&](std::vector<Complex> v) {
        std::vector<Complex> out;
        Real tol = pow2(-static_cast<long>(ctx.bits / 2));
        for (const auto& x : v) {
            bool dup = false;
            for (const auto& o : out)
                if (abs(x - o) < tol) dup = true;
            if (!dup) out.push_back(x);
        }
        return out;
    };

    std::vector<std::pair<Complex, Complex>> points; // critical (x1, x2) pairs
    if (c11 == 0) {
        // gradient decouples into two univariate quadratics
        Poly q1({c10, 2 * c20, Rational(3)});
        Poly q2({c01, 2 * c02, Rational(3)});
        auto r1 = dedup(poly_roots_numeric(q1, ctx));
        auto r2 = dedup(poly_roots_numeric(q2, ctx));
        for (const auto& a : r1)
            for (const auto& b : r2) points.emplace_back(a, b);
    } else {
        // eliminate x2: the x1-gradient is linear in x2 with slope c11, so
        // resultant(p1, p2; x2) = 3 b^2 - 2 c02 c11 b + c11^2 (c11 x1 + c01)
        // where b(x1) = 3 x1^2 + 2 c20 x1 + c10
        Poly b({c10, 2 * c20, Rational(3)});
        Poly R = b * b * Rational(3) - b * (2 * c02 * c11) +
                 Poly({c11 * c11 * c01, c11 * c11 * c11});
        for (const auto& a : dedup(poly_roots_numeric(R, ctx))) {
            Complex x2 = -b.eval(a) / Complex(c11);
            points.emplace_back(a, x2);
        }
    }

    CriticalValueSet out;
    out.max_gradient_residual = Real(0);
    std::vector<Complex> vals;
    for (const auto& [a, b2] : points) {
        Complex p1 = Complex(3) * a * a + Complex(Rational(2 * c20)) * a + Complex(c11) * b2 +
                     Complex(c10);
        Complex p2 = Complex(3) * b2 * b2 + Complex(c11) * a + Complex(Rational(2 * c02)) * b2 +
                     Complex(c01);
        Real r = abs(p1) + abs(p2);
        if (r > out.max_gradient_residual) out.max_gradient_residual = r;
        Complex f = a * a * a + b2 * b2 * b2 + Complex(c20) * a * a + Complex(c11) * a * b2 +
                    Complex(c02) * b2 * b2 + Complex(c10) * a + Complex(c01) * b2;
        vals.push_back(f);
    }
    out.values = dedup(vals);
    return out;
}

ConsistencyReport singular_locus_consistency(const std::string& name, const PrecisionCtx& ctx) {
    ScopedPrecision guard(ctx);
    const FamilyRecord& fam = catalog_get(name);
    ConsistencyReport rep;
    rep.family = name;
    rep.max_mismatch = Real(0);
    rep.criticals = critical_values(name, ctx).values;

    Real tol = pow(Real(10), -(static_cast<long>(ctx.digits10()) - 10));
    auto near_some = [&](const Complex& v, const std::vector<Complex>& set, Real& worst) {
        Real best(-1);
        for (const auto& s : set) {
            Real d = abs(v - s);
            if (best < 0 || d < best) best = d;
        }
        if (best > worst) worst = best;
        return best >= 0 && best < tol;
    };

    rep.criticals_in_every_leading = true;
    std::vector<Poly> lead_polys{fam.singular_locus};
    std::vector<std::string> lead_labels{"locus"};
    for (const auto& fo : fam.odes) {
        lead_polys.push_back(fo.ode.leading());
        lead_labels.push_back(fo.label);
    }
    for (size_t k = 0; k < lead_polys.size(); ++k) {
        if (lead_polys[k].degree() < 1) continue;
        auto roots = poly_roots_numeric(lead_polys[k], ctx);
        for (const auto& c : rep.criticals)
            if (!near_some(c, roots, rep.max_mismatch)) rep.criticals_in_every_leading = false;
        // roots that are not critical values are apparent-singularity candidates
        if (k == 0) continue;
        const ScalarODE& ode = fam.odes[k - 1].ode;
        for (const auto& r : roots) {
            Real ignore(0);
            if (near_some(r, rep.criticals, ignore)) continue;
            bool seen = false;
            for (const auto& cand : rep.leftovers)
                if (abs(cand.point - r) < tol && cand.ode_label == lead_labels[k]) seen = true;
            if (seen) continue;
            ApparentCandidate cand;
            cand.point = r;
            cand.ode_label = lead_labels[k];
            if (ode.order() <= 3)
                cand.verdict = apparent_singularity_test(ode, r, ctx);
            else
                cand.verdict = SingularityKind::TrueSingularity; // untested order-4 case
            rep.leftovers.push_back(cand);
        }
    }
    rep.ok = rep.criticals_in_every_leading;
    for (const auto& cand : rep.leftovers)
        if (cand.verdict != SingularityKind::Apparent) rep.ok = false;
    return rep;
}

} // namespace periodlab

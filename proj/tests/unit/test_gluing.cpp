#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cubic/gluing.hpp"

#include "reference_data.hpp"

using namespace cubic;
using namespace cubic::reference;

namespace {

QVec negated(QVec v)
{
    for (auto& x : v)
        x = -x;
    return v;
}

RealQuadMatrix evaluate(const Word& w, const std::vector<RealQuadMatrix>& gens)
{
    RealQuadMatrix m = RealQuadMatrix::identity(5);
    for (const auto& [g, power] : w) {
        RealQuadMatrix x = power > 0 ? gens[g] : inverse(gens[g]);
        for (int i = 0; i < std::abs(power); ++i)
            m = m * x;
    }
    return m;
}

std::vector<RealQuadMatrix> generator_matrices(const GluedPolyhedron& Q, const Presentation& p)
{
    std::vector<RealQuadMatrix> gens;
    for (const auto& name : p.generators) {
        if (name == "tau")
            gens.push_back(Q.tau);
        else if (name == "tau'")
            gens.push_back(Q.tau_prime);
        else if (name == "S")
            gens.push_back(Q.S);
        else
            gens.push_back(Q.reflection(name));
    }
    return gens;
}

} // namespace

TEST_CASE("the eight chambers and their coincidences")
{
    PlacedChambers placed = build_chambers();
    CHECK(placed.chambers.size() == 8);
    CHECK(placed.S == S_ref);
    CHECK(preserves_minkowski(placed.S));
    CHECK(placed.S * placed.S == RealQuadMatrix::identity(5));
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& c : placed.coincidences)
        got.insert({c.first, c.second});
    std::set<std::pair<std::string, std::string>> want = {{"P04", "P14"}, {"P04'", "P17"}, {"P13", "P24"},
                                                          {"P22", "P34"}, {"P26", "P34'"}, {"P31", "P44"},
                                                          {"P31'", "P44'"}};
    CHECK(got == want);
    for (const auto& [a, b] : want) {
        CHECK(std::find(interior_walls().begin(), interior_walls().end(), a) != interior_walls().end());
        CHECK(std::find(interior_walls().begin(), interior_walls().end(), b) != interior_walls().end());
    }
    CHECK(interior_walls().size() == 14);
    // s_jk is r_jk with theta replaced by -sqrt3
    const PlacedChamber& p3 = placed.chamber("P3");
    CHECK(p3.root(7) == QVec{q(3), q(-1), q(0, 1), q(0, 1), q(0, 1)});
    const PlacedChamber& p0p = placed.chamber("P0'");
    CHECK(p0p.root(1) == placed.S * placed.chamber("P0").root(1));
}

TEST_CASE("simple roots of Q")
{
    GluedPolyhedron Q = assemble_q();
    REQUIRE(Q.walls.size() == wall_refs().size());
    for (std::size_t i = 0; i < Q.walls.size(); ++i) {
        const WallRef& ref = wall_refs()[i];
        INFO(ref.name);
        CHECK(Q.walls[i].name == ref.name);
        CHECK(Q.walls[i].root == ref.root);
        std::set<std::string> prov(Q.walls[i].provenance.begin(), Q.walls[i].provenance.end());
        CHECK(prov == ref.provenance);
        long n = (ref.name[0] == 'A' || ref.name[0] == 'B') ? 1 : 2;
        CHECK(minkowski_product(ref.root, ref.root) == q(n));
    }
    // S exchanges primed and unprimed walls
    for (const auto& w : wall_refs()) {
        std::string other = w.name.size() == 1 ? w.name + "'" : w.name.substr(0, 1);
        CHECK(Q.S * w.root == Q.root(other));
    }
}

TEST_CASE("Coxeter diagram of Q")
{
    GluedPolyhedron Q = assemble_q();
    std::map<std::set<std::string>, Bond> want;
    auto add = [&](const std::string& a, const std::string& b, Bond bond) { want[{a, b}] = bond; };
    for (const std::string p : {"", "'"}) {
        std::string o = p.empty() ? "'" : "";
        add("A" + p, "B" + p, Bond::Parallel);
        add("C" + p, "D" + p, Bond::Pi3);
        add("C" + p, "D" + o, Bond::Pi3);
        add("C" + p, "E" + o, Bond::Pi3);
        add("A" + p, "C" + p, Bond::Ultraparallel);
        add("B" + p, "C" + p, Bond::Ultraparallel);
        add("B" + p, "D" + p, Bond::Ultraparallel);
        add("A" + p, "E" + p, Bond::Ultraparallel);
        add("A" + p, "B" + o, Bond::Ultraparallel);
        add("D" + p, "E" + p, Bond::Pi6);
    }
    add("A", "A'", Bond::Ultraparallel);
    add("B", "B'", Bond::Ultraparallel);
    const CoxeterDiagram& d = Q.diagram;
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a + 1; b < d.size(); ++b) {
            auto it = want.find({d.names[a], d.names[b]});
            INFO(d.names[a] << " " << d.names[b]);
            CHECK(d.bond(a, b) == (it == want.end() ? Bond::Orthogonal : it->second));
        }
}

TEST_CASE("side pairings")
{
    GluedPolyhedron Q = assemble_q();
    CHECK(Q.tau == tau_ref);
    CHECK(preserves_minkowski(Q.tau));
    CHECK(is_integral(Q.tau));
    CHECK(Q.tau * Q.root("A") == negated(Q.root("B")));
    for (const char* x : {"E'", "D'", "C'"})
        CHECK(Q.tau * Q.root(x) == Q.root(x));
    CHECK(Q.tau * Q.root("D") == Q.root("E"));
    CHECK(Q.tau_prime == Q.S * Q.tau * Q.S);
    CHECK(Q.tau_prime * Q.root("A'") == negated(Q.root("B'")));

    Matrix<Eisenstein> g = discriminant_wall_pairing();
    CHECK(g == gamma_ref);
    Matrix<Eisenstein> J = hermitian_gram();
    CHECK(g.transpose() * J * conj(g) == J);
    EisensteinQ det = determinant(g.map([](const Eisenstein& x) { return to_field(x); }));
    REQUIRE(is_integral(det));
    CHECK(is_unit(to_ring(det)));
}

TEST_CASE("solve_side_pairing rejects non-isometries")
{
    GluedPolyhedron Q = assemble_q();
    std::vector<std::pair<QVec, QVec>> c;
    for (const char* x : {"A", "E'", "D'", "C'", "D"})
        c.push_back({Q.root(x), Q.root(x)});
    CHECK(solve_side_pairing(c) == RealQuadMatrix::identity(5));
    c[0].second = Q.root("B");
    CHECK_THROWS(solve_side_pairing(c));
}

TEST_CASE("Poincare conditions")
{
    GluedPolyhedron Q = assemble_q();
    PoincareReport r = verify_poincare(Q);
    CHECK(r.passed());
    CHECK(r.checks.size() == 7);
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }

    GluedPolyhedron bent = Q;
    QVec sum = bent.root("A");
    const QVec& c = bent.root("C");
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += c[i];
    for (auto& w : bent.walls)
        if (w.name == "C")
            w.root = sum;
    CHECK_FALSE(verify_poincare(bent).passed());

    GluedPolyhedron untwisted = Q;
    untwisted.tau = RealQuadMatrix::identity(5);
    CHECK_FALSE(verify_poincare(untwisted).passed());
}

TEST_CASE("presentation of the stable moduli group")
{
    GluedPolyhedron Q = assemble_q();
    Presentation half = presentation_pgamma_r(Q, false);
    CHECK(half.generators.size() == 8);
    // 6 involutions, 15 Coxeter pairs, 4 + 4 tau relations
    CHECK(half.relations.size() == 29);
    Presentation full = presentation_pgamma_r(Q, true);
    CHECK(full.generators.size() == 9);
    CHECK(full.relations.size() == 29 + 1 + 8);

    std::set<std::string> text;
    for (const auto& r : full.relations)
        text.insert(full.to_string(r));
    CHECK(text.count("tau D = E tau"));
    CHECK(text.count("tau' D' = E' tau'"));
    CHECK(text.count("S C S^-1 = C'"));

    std::vector<RealQuadMatrix> gens = generator_matrices(Q, full);
    for (const auto& r : full.relations) {
        INFO(full.to_string(r));
        CHECK(evaluate(r.lhs, gens) == evaluate(r.rhs, gens));
    }
}

TEST_CASE("trace certificate")
{
    Certificate c = nonarithmeticity_certificate();
    CHECK(c.tr_gamma == q(13, 6));
    CHECK(c.tr_gamma_sq == q(209, 120));
    CHECK(c.tr_ad == q(34, 18));
    // Tr Ad = ((Tr g)^2 - Tr g^2) / 2
    CHECK(c.tr_ad == (c.tr_gamma * c.tr_gamma - c.tr_gamma_sq) * QuadScalar(Rational(1, 2)));
    CHECK(c.trace_field == "Q(sqrt3)");
    CHECK(c.verdict == "nonarithmetic");
    CHECK(c.galois_form_signature.positive == 4);
    CHECK(c.galois_form_signature.negative == 1);
    CHECK(c.gamma.trace() == c.tr_gamma);

    // a reflection group with rational roots gives a rational trace field
    PlacedChambers placed = build_chambers();
    const PlacedChamber& p0 = placed.chamber("P0");
    std::vector<std::string> names;
    std::vector<RealQuadMatrix> gens;
    for (int k = 1; k <= 5; ++k) {
        names.push_back("r" + std::to_string(k));
        gens.push_back(minkowski_reflection(p0.root(k)));
    }
    Certificate a = trace_certificate(names, gens, {0, 1, 2});
    CHECK(a.trace_field == "Q");
    CHECK(a.verdict.rfind("arithmetic", 0) == 0);
}

TEST_CASE("volume bookkeeping")
{
    VolumeBookkeeping v = q_volume_bookkeeping();
    CHECK(v.chi_glued == Rational(37, 720));
    CHECK(v.chi_quotients == v.chi_glued);
    // independent: the orbifold Euler characteristic of W(Q) from Q's diagram
    CHECK(euler_characteristic(assemble_q().diagram).chi == v.chi_glued);
    CHECK(v.volume == doctest::Approx(0.676251).epsilon(1e-6));
}

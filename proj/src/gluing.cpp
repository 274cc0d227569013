#include "cubic/gluing.hpp"

#include <algorithm>
#include <map>

namespace cubic {

namespace {

RealQuadMatrix minkowski_gram()
{
    RealQuadMatrix j = RealQuadMatrix::identity(5);
    j(0, 0) = QuadScalar(-1);
    return j;
}

QuadScalar mnorm(const QVec& x) { return minkowski_product(x, x); }

QVec qscale(const QuadScalar& c, const QVec& v) { return scale(c, v); }

// Positive multiple of v whose first nonzero coordinate is +-1.
QVec ray(const QVec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) {
            QuadScalar a = sign(x) > 0 ? x : -x;
            return qscale(inverse(a), v);
        }
    throw PreconditionError("zero vector has no direction");
}

bool is_negative_multiple(const QVec& s, const QVec& t) { return ray(s) == ray(qscale(QuadScalar(-1), t)); }

QVec project(const QVec& x, const QVec& s)
{
    QuadScalar c = minkowski_product(x, s) * inverse(mnorm(s));
    return sub(x, qscale(c, s));
}

bool meets(Bond b) { return b != Bond::Parallel && b != Bond::Ultraparallel; }

QuadScalar cos2(const QVec& r, const QVec& s)
{
    QuadScalar rs = minkowski_product(r, s);
    return rs * rs * inverse(mnorm(r) * mnorm(s));
}

// Normalized root of norm 1 or 2 on the same ray.
QVec normalize_root(const QVec& r)
{
    QuadScalar n = mnorm(r);
    if (n == QuadScalar(1) || n == QuadScalar(2))
        return r;
    if (n == QuadScalar(3) || n == QuadScalar(6))
        return qscale(QuadScalar(Rational(0), Rational(1, 3)), r); // r / sqrt3
    throw VerificationError("unexpected root norm " + to_string(n));
}

} // namespace

bool preserves_minkowski(const RealQuadMatrix& m)
{
    RealQuadMatrix j = minkowski_gram();
    return m.rows() == 5 && m.cols() == 5 && m.transpose() * j * m == j;
}

bool is_integral(const RealQuadMatrix& m)
{
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b)
            if (!m(a, b).is_integral())
                return false;
    return true;
}

bool is_rational(const RealQuadMatrix& m)
{
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b)
            if (!m(a, b).is_rational())
                return false;
    return true;
}

RealQuadMatrix minkowski_reflection(const QVec& s)
{
    QuadScalar n = mnorm(s);
    if (s.size() != 5 || n.is_zero())
        throw PreconditionError("reflection needs a non-isotropic 5-vector");
    QuadScalar c = QuadScalar(2) * inverse(n);
    RealQuadMatrix m = RealQuadMatrix::identity(5);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
            QuadScalar js = b == 0 ? -s[b] : s[b];
            m(a, b) -= c * s[a] * js;
        }
    return m;
}

const QVec& PlacedChamber::root(int k) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == k)
            return roots[i];
    throw PreconditionError("no wall " + std::to_string(k) + " in " + name);
}

std::string PlacedChamber::wall_name(int k) const
{
    return "P" + std::to_string(j) + std::to_string(k) + (primed ? "'" : "");
}

const PlacedChamber& PlacedChambers::chamber(const std::string& name) const
{
    for (const auto& c : chambers)
        if (c.name == name)
            return c;
    throw PreconditionError("no chamber " + name);
}

RealQuadMatrix solve_side_pairing(const std::vector<std::pair<QVec, QVec>>& constraints)
{
    std::vector<QVec> src, dst;
    for (const auto& [s, t] : constraints) {
        src.push_back(s);
        dst.push_back(t);
    }
    RealQuadMatrix m = solve_linear_map(src, dst);
    if (!preserves_minkowski(m))
        throw VerificationError("side pairing does not preserve the form");
    if (!is_integral(m))
        throw VerificationError("side pairing has entries outside Z[sqrt3]");
    return m;
}

const std::vector<std::string>& interior_walls()
{
    static const std::vector<std::string> walls = {"P04", "P04'", "P14", "P17", "P13", "P24", "P26",
                                                   "P22", "P34", "P34'", "P31", "P31'", "P44", "P44'"};
    return walls;
}

namespace {

// Checks that wall k of a and wall l of b span one hyperplane from opposite
// sides and cut out the same facet.
void check_coincidence(const PlacedChamber& a, int k, const PlacedChamber& b, int l)
{
    const QVec& s = a.root(k);
    const QVec& t = b.root(l);
    std::string what = a.wall_name(k) + " = " + b.wall_name(l);
    if (!is_negative_multiple(s, t))
        throw VerificationError(what + ": roots are not negative multiples");
    auto facet = [](const PlacedChamber& c, int wall) {
        std::size_t w = c.diagram.index_of("r" + std::to_string(wall));
        std::vector<QVec> out;
        for (std::size_t i = 0; i < c.roots.size(); ++i)
            if (i != w && meets(c.diagram.bond(w, i)))
                out.push_back(ray(project(c.roots[i], c.roots[w])));
        std::sort(out.begin(), out.end(), [](const QVec& x, const QVec& y) {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                                [](const QuadScalar& p, const QuadScalar& q) {
                                                    return p < q;
                                                });
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    if (facet(a, k) != facet(b, l))
        throw VerificationError(what + ": facets differ");
}

} // namespace

PlacedChambers build_chambers()
{
    PlacedChambers out;
    std::vector<Chamber> base;
    for (int j = 0; j < 5; ++j)
        base.push_back(build_chamber(j));
    auto place = [](const Chamber& c) {
        PlacedChamber p;
        p.name = "P" + std::to_string(c.j);
        p.j = c.j;
        p.labels = c.labels;
        for (const auto& r : c.roots)
            p.roots.push_back(to_real(c.j, r));
        p.diagram = c.diagram;
        return p;
    };
    for (const auto& c : base)
        out.chambers.push_back(place(c));

    // S from the nontrivial diagram automorphism of P_1
    const Chamber& c1 = base[1];
    if (c1.automorphisms.size() != 2)
        throw VerificationError("W1 should have exactly one nontrivial diagram automorphism");
    const PlacedChamber& p1 = out.chambers[1];
    std::vector<std::pair<QVec, QVec>> cons;
    for (std::size_t i = 0; i < p1.roots.size(); ++i)
        cons.push_back({p1.roots[i], p1.roots[c1.automorphisms[1][i]]});
    out.S = solve_side_pairing(cons);
    // the same isometry is the diagram automorphism of P_2
    const Chamber& c2 = base[2];
    const PlacedChamber& p2 = out.chambers[2];
    std::vector<QVec> img;
    for (const auto& r : p2.roots)
        img.push_back(out.S * r);
    bool s_preserves_p2 = c2.automorphisms.size() == 2;
    for (std::size_t i = 0; s_preserves_p2 && i < p2.roots.size(); ++i)
        s_preserves_p2 = img[i] == p2.roots[c2.automorphisms[1][i]];
    if (!s_preserves_p2)
        throw VerificationError("S is not the diagram automorphism of P_2");

    for (int j : {0, 3, 4}) {
        PlacedChamber p = out.chambers[j];
        p.name += "'";
        p.primed = true;
        for (auto& r : p.roots)
            r = out.S * r;
        out.chambers.push_back(p);
    }

    struct Glue {
        const char* a;
        int k;
        const char* b;
        int l;
    };
    const Glue glues[] = {{"P0", 4, "P1", 4},  {"P0'", 4, "P1", 7}, {"P1", 3, "P2", 4},  {"P2", 2, "P3", 4},
                          {"P2", 6, "P3'", 4}, {"P3", 1, "P4", 4},  {"P3'", 1, "P4'", 4}};
    for (const auto& g : glues) {
        const PlacedChamber& a = out.chamber(g.a);
        const PlacedChamber& b = out.chamber(g.b);
        check_coincidence(a, g.k, b, g.l);
        out.coincidences.push_back({a.wall_name(g.k), b.wall_name(g.l)});
    }
    return out;
}

const GluedWall& GluedPolyhedron::wall(const std::string& name) const
{
    for (const auto& w : walls)
        if (w.name == name)
            return w;
    throw PreconditionError("no wall " + name + " in Q");
}

GluedPolyhedron assemble_q() { return assemble_q(build_chambers()); }

GluedPolyhedron assemble_q(const PlacedChambers& placed)
{
    const auto& interior = interior_walls();
    std::vector<QVec> distinct;
    std::vector<std::vector<std::string>> provenance;
    std::size_t retained = 0;
    for (const auto& c : placed.chambers)
        for (std::size_t i = 0; i < c.roots.size(); ++i) {
            std::string w = c.wall_name(c.labels[i]);
            if (std::find(interior.begin(), interior.end(), w) != interior.end())
                continue;
            ++retained;
            QVec r = normalize_root(c.roots[i]);
            auto it = std::find(distinct.begin(), distinct.end(), r);
            if (it == distinct.end()) {
                distinct.push_back(r);
                provenance.push_back({w});
            } else {
                provenance[it - distinct.begin()].push_back(w);
            }
        }
    if (retained != 36)
        throw VerificationError("expected 36 retained chamber walls, got " + std::to_string(retained));
    if (distinct.size() != 10)
        throw VerificationError("expected 10 walls of Q, got " + std::to_string(distinct.size()));

    // wall names from one chamber wall lying in each
    const std::pair<const char*, const char*> keys[] = {{"A", "P37"},  {"B", "P46"},   {"C", "P05"},  {"D", "P27"},
                                                        {"E", "P01"},  {"E'", "P15"},  {"D'", "P03"}, {"C'", "P02"},
                                                        {"B'", "P46'"}, {"A'", "P37'"}};
    GluedPolyhedron q;
    for (const auto& [name, key] : keys) {
        bool found = false;
        for (std::size_t i = 0; i < distinct.size() && !found; ++i)
            if (std::find(provenance[i].begin(), provenance[i].end(), key) != provenance[i].end()) {
                q.walls.push_back({name, distinct[i], provenance[i]});
                found = true;
            }
        if (!found)
            throw VerificationError(std::string("no wall of Q contains ") + key);
    }
    for (std::size_t a = 0; a < q.walls.size(); ++a)
        for (std::size_t b = a + 1; b < q.walls.size(); ++b)
            if (q.walls[a].root == q.walls[b].root)
                throw VerificationError("walls " + q.walls[a].name + " and " + q.walls[b].name + " coincide");

    std::vector<QVec> roots;
    std::vector<std::string> names;
    for (const auto& w : q.walls) {
        roots.push_back(w.root);
        names.push_back(w.name);
    }
    q.diagram = diagram_from_roots(roots, names);
    q.S = placed.S;
    q.tau = solve_side_pairing({{q.root("A"), qscale(QuadScalar(-1), q.root("B"))},
                                {q.root("E'"), q.root("E'")},
                                {q.root("D'"), q.root("D'")},
                                {q.root("C'"), q.root("C'")},
                                {q.root("D"), q.root("E")}});
    q.tau_prime = q.S * q.tau * q.S;
    return q;
}

Matrix<Eisenstein> discriminant_wall_pairing()
{
    const auto& r3 = standard_roots(3);
    const auto& r4 = standard_roots(4);
    auto lam = [](int j, const ZVec& r) {
        EVec v = to_lambda(j, r);
        Vec<EisensteinQ> out;
        for (const auto& x : v)
            out.push_back(to_field(x));
        return out;
    };
    Vec<EisensteinQ> t37 = lam(3, r3[6]);
    for (auto& x : t37)
        x = to_field(Eisenstein::theta()) * x;
    std::vector<Vec<EisensteinQ>> src = {t37, lam(3, r3[4]), lam(3, r3[1]), lam(3, r3[2]), lam(3, r3[5])};
    std::vector<Vec<EisensteinQ>> dst = {lam(4, r4[5]), lam(4, r4[4]), lam(4, r4[0]), lam(4, r4[1]), lam(4, r4[2])};
    Matrix<EisensteinQ> g = solve_linear_map(src, dst);
    Matrix<Eisenstein> e(5, 5);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) {
            if (!is_integral(g(a, b)))
                throw VerificationError("wall pairing is not defined over E");
            e(a, b) = to_ring(g(a, b));
        }
    Matrix<Eisenstein> h = hermitian_gram();
    if (!(e.transpose() * h * conj(e) == h))
        throw VerificationError("wall pairing does not preserve h");
    return e;
}

bool PoincareReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const PoincareCheck& c) { return c.passed; });
}

PoincareReport verify_poincare(const GluedPolyhedron& q)
{
    PoincareReport rep;
    rep.completeness = "not checked; inherited from the completeness of the moduli quotient";
    std::size_t n = q.walls.size();
    std::vector<bool> disc(n);
    for (std::size_t i = 0; i < n; ++i)
        disc[i] = mnorm(q.walls[i].root) == QuadScalar(1);

    auto add = [&](const std::string& name, const std::vector<std::string>& failures) {
        std::string detail;
        for (const auto& f : failures)
            detail += (detail.empty() ? "" : "; ") + f;
        rep.checks.push_back({name, failures.empty(), detail});
    };

    std::vector<std::string> fail;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (sign(minkowski_product(q.walls[a].root, q.walls[b].root)) > 0)
                fail.push_back(q.walls[a].name + "." + q.walls[b].name + " > 0");
    add("roots_pairwise_nonpositive", fail);

    const QuadScalar allowed[] = {QuadScalar(0), QuadScalar(Rational(1, 4)), QuadScalar(Rational(1, 2)),
                                  QuadScalar(Rational(3, 4)), QuadScalar(Rational(1, 2), Rational(1, 4))};
    fail.clear();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (disc[a] || disc[b])
                continue;
            QuadScalar c = cos2(q.walls[a].root, q.walls[b].root);
            if (!(c < QuadScalar(1)))
                continue;
            if (std::find(std::begin(allowed), std::end(allowed), c) == std::end(allowed))
                fail.push_back(q.walls[a].name + "," + q.walls[b].name + " cos^2 = " + to_string(c));
        }
    add("eckardt_angles_submultiples_of_pi", fail);

    fail.clear();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (disc[a] && disc[b] && cos2(q.walls[a].root, q.walls[b].root) < QuadScalar(1))
                fail.push_back(q.walls[a].name + "," + q.walls[b].name + " intersect");
    add("discriminant_walls_disjoint", fail);

    fail.clear();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!disc[a] || disc[b])
                continue;
            QuadScalar c = cos2(q.walls[a].root, q.walls[b].root);
            if (c < QuadScalar(1) && !c.is_zero())
                fail.push_back(q.walls[a].name + "," + q.walls[b].name + " meet obliquely");
        }
    add("discriminant_walls_orthogonal_to_eckardt", fail);

    auto pairing = [&](const std::string& label, const RealQuadMatrix& t, const std::string& from,
                       const std::string& to) {
        std::vector<std::string> f;
        if (!preserves_minkowski(t))
            f.push_back("form not preserved");
        if (!is_integral(t))
            f.push_back("entries outside Z[sqrt3]");
        if (!(t * q.root(from) == qscale(QuadScalar(-1), q.root(to))))
            f.push_back("s_" + from + " does not map to -s_" + to);
        auto neighbours = [&](const std::string& w) {
            std::vector<QVec> out;
            for (const auto& x : q.walls)
                if (x.name != w && cos2(x.root, q.root(w)) < QuadScalar(1))
                    out.push_back(x.root);
            return out;
        };
        std::vector<QVec> src = neighbours(from), dst = neighbours(to);
        if (src.size() != dst.size())
            f.push_back("walls meeting " + from + " and " + to + " differ in number");
        for (const auto& r : src)
            if (std::find(dst.begin(), dst.end(), t * r) == dst.end())
                f.push_back("a wall meeting " + from + " is not carried to a wall meeting " + to);
        add(label, f);
    };
    pairing("tau_pairs_A_with_B", q.tau, "A", "B");
    pairing("tau_prime_pairs_A'_with_B'", q.tau_prime, "A'", "B'");

    fail.clear();
    if (!(q.tau_prime == q.S * q.tau * q.S))
        fail.push_back("tau' != S tau S");
    if (!(q.S * q.S == RealQuadMatrix::identity(5)))
        fail.push_back("S is not an involution");
    for (const auto& w : q.walls) {
        std::string image = w.name.back() == '\'' ? w.name.substr(0, w.name.size() - 1) : w.name + "'";
        if (!(q.S * w.root == q.root(image)))
            fail.push_back("S does not carry " + w.name + " to " + image);
    }
    add("s_symmetry", fail);
    return rep;
}

Presentation presentation_pgamma_r(const GluedPolyhedron& q, bool with_s)
{
    Presentation p;
    const std::vector<std::string> refl = {"C", "C'", "D", "D'", "E", "E'"};
    for (const auto& r : refl)
        p.add_generator(r);
    std::size_t tau = p.add_generator("tau");
    std::size_t taup = p.add_generator("tau'");
    auto gen = [&](const std::string& name) {
        return static_cast<std::size_t>(std::find(p.generators.begin(), p.generators.end(), name) -
                                        p.generators.begin());
    };
    for (std::size_t a = 0; a < refl.size(); ++a)
        p.relations.push_back({{{a, 1}, {a, 1}}, {}});
    for (std::size_t a = 0; a < refl.size(); ++a)
        for (std::size_t b = a + 1; b < refl.size(); ++b) {
            int m = coxeter_m(q.diagram.bond(q.diagram.index_of(refl[a]), q.diagram.index_of(refl[b])));
            if (m == 0)
                continue;
            Word w;
            for (int i = 0; i < m; ++i) {
                w.push_back({a, 1});
                w.push_back({b, 1});
            }
            p.relations.push_back({w, {}});
        }
    auto commute = [&](std::size_t t, const std::string& x) {
        p.relations.push_back({{{t, 1}, {gen(x), 1}}, {{gen(x), 1}, {t, 1}}});
    };
    for (const auto& x : {"C'", "D'", "E'"})
        commute(tau, x);
    p.relations.push_back({{{tau, 1}, {gen("D"), 1}}, {{gen("E"), 1}, {tau, 1}}});
    for (const auto& x : {"C", "D", "E"})
        commute(taup, x);
    p.relations.push_back({{{taup, 1}, {gen("D'"), 1}}, {{gen("E'"), 1}, {taup, 1}}});
    if (with_s) {
        std::size_t s = p.add_generator("S");
        p.relations.push_back({{{s, 1}, {s, 1}}, {}});
        const std::pair<const char*, const char*> swaps[] = {{"C", "C'"}, {"D", "D'"}, {"E", "E'"}, {"tau", "tau'"}};
        for (const auto& [x, y] : swaps) {
            p.relations.push_back({{{s, 1}, {gen(x), 1}, {s, -1}}, {{gen(y), 1}}});
            p.relations.push_back({{{s, 1}, {gen(y), 1}, {s, -1}}, {{gen(x), 1}}});
        }
    }
    return p;
}

Certificate trace_certificate(const std::vector<std::string>& names, const std::vector<RealQuadMatrix>& gens,
                              const std::vector<std::size_t>& word)
{
    if (names.size() != gens.size() || word.empty())
        throw PreconditionError("certificate needs named generators and a nonempty word");
    Certificate c;
    c.generators = names;
    bool rational = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!is_integral(gens[i]))
            throw VerificationError("generator " + names[i] + " has entries outside Z[sqrt3]");
        if (!preserves_minkowski(gens[i]))
            throw VerificationError("generator " + names[i] + " does not preserve the form");
        rational = rational && is_rational(gens[i]);
    }
    RealQuadMatrix g = RealQuadMatrix::identity(5);
    for (auto i : word) {
        if (i >= gens.size())
            throw PreconditionError("word refers to a missing generator");
        g = g * gens[i];
    }
    c.gamma = g * g;
    c.tr_gamma = c.gamma.trace();
    c.tr_gamma_sq = (c.gamma * c.gamma).trace();
    c.tr_ad = (c.tr_gamma * c.tr_gamma - c.tr_gamma_sq) * QuadScalar(Rational(1, 2));

    RealQuadMatrix conj_form = minkowski_gram().map([](const QuadScalar& x) { return galois_conjugate(x); });
    c.galois_form_signature = inertia(conj_form);
    bool indefinite = c.galois_form_signature.positive > 0 && c.galois_form_signature.negative > 0;
    if (rational) {
        c.trace_field = "Q";
        c.verdict = "arithmetic (trace field rational, form defined over Q)";
    } else if (!c.tr_ad.is_rational()) {
        c.trace_field = "Q(sqrt3)";
        c.verdict = indefinite ? "nonarithmetic" : "arithmetic";
    } else {
        c.trace_field = "undetermined";
        c.verdict = "undetermined";
    }
    return c;
}

Certificate nonarithmeticity_certificate(const GluedPolyhedron& q)
{
    std::vector<std::string> names = {"C", "D", "E", "E'", "D'", "C'", "tau", "tau'"};
    std::vector<RealQuadMatrix> gens;
    for (std::size_t i = 0; i < 6; ++i)
        gens.push_back(q.reflection(names[i]));
    gens.push_back(q.tau);
    gens.push_back(q.tau_prime);
    return trace_certificate(names, gens, {0, 4, 3});
}

Certificate nonarithmeticity_certificate() { return nonarithmeticity_certificate(assemble_q()); }

VolumeBookkeeping q_volume_bookkeeping()
{
    VolumeBookkeeping v;
    const int copies[] = {2, 1, 1, 2, 2};
    for (int j = 0; j < 5; ++j) {
        Chamber c = build_chamber(j);
        Rational chi = euler_characteristic(c.diagram).chi;
        v.chi_glued += copies[j] * chi;
        v.chi_quotients += Rational(2 * chi / static_cast<long>(c.automorphisms.size()));
    }
    v.volume = volume_from_chi(v.chi_glued);
    return v;
}

} // namespace cubic

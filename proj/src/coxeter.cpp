#include "cubic/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cubic {

int coxeter_m(Bond b)
{
    switch (b) {
    case Bond::Orthogonal: return 2;
    case Bond::Pi3: return 3;
    case Bond::Pi4: return 4;
    case Bond::Pi6: return 6;
    default: return 0;
    }
}

std::string to_string(Bond b)
{
    switch (b) {
    case Bond::Orthogonal: return "orthogonal";
    case Bond::Pi3: return "pi/3";
    case Bond::Pi4: return "pi/4";
    case Bond::Pi6: return "pi/6";
    case Bond::Parallel: return "parallel";
    case Bond::Ultraparallel: return "ultraparallel";
    }
    return "?";
}

Bond angle_label_from_cos2(const Rational& c)
{
    if (c == 0)
        return Bond::Orthogonal;
    if (c == Rational(1, 4))
        return Bond::Pi3;
    if (c == Rational(1, 2))
        return Bond::Pi4;
    if (c == Rational(3, 4))
        return Bond::Pi6;
    if (c == 1)
        return Bond::Parallel;
    if (c > 1)
        return Bond::Ultraparallel;
    throw VerificationError("angle is not a Coxeter angle: cos^2 = " + to_string(c));
}

Bond angle_label_from_cos2(const QuadScalar& c)
{
    if (c.is_rational())
        return angle_label_from_cos2(c.a);
    if (c > QuadScalar(1))
        return Bond::Ultraparallel;
    throw VerificationError("angle is not a Coxeter angle: cos^2 = " + to_string(c));
}

Bond angle_label(const ZForm& form, const ZVec& r, const ZVec& s)
{
    Integer rs = inner_product(form, r, s);
    if (rs > 0)
        throw PreconditionError("walls with positive inner product: " + to_string(r) + ", " + to_string(s));
    Integer rr = norm(form, r), ss = norm(form, s);
    return angle_label_from_cos2(make_rational(rs * rs, rr * ss));
}

QuadScalar minkowski_product(const QVec& x, const QVec& y)
{
    if (x.size() != 5 || y.size() != 5)
        throw PreconditionError("Minkowski vectors must have 5 coordinates");
    QuadScalar s = -(x[0] * y[0]);
    for (std::size_t i = 1; i < 5; ++i)
        s += x[i] * y[i];
    return s;
}

Bond angle_label(const QVec& r, const QVec& s)
{
    QuadScalar rs = minkowski_product(r, s);
    if (sign(rs) > 0)
        throw PreconditionError("walls with positive inner product");
    QuadScalar c = rs * rs * inverse(minkowski_product(r, r) * minkowski_product(s, s));
    return angle_label_from_cos2(c);
}

std::size_t CoxeterDiagram::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return i;
    throw PreconditionError("no node named " + name);
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<std::size_t>& nodes) const
{
    CoxeterDiagram d;
    for (auto i : nodes)
        d.add_node(names[i], norms[i]);
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b)
            d.bonds[a][b] = bonds[nodes[a]][nodes[b]];
    return d;
}

void CoxeterDiagram::add_node(const std::string& name, const Rational& norm)
{
    names.push_back(name);
    norms.push_back(norm);
    for (auto& row : bonds)
        row.push_back(Bond::Orthogonal);
    bonds.emplace_back(names.size(), Bond::Orthogonal);
}

void CoxeterDiagram::set_bond(std::size_t i, std::size_t j, Bond b)
{
    bonds[i][j] = b;
    bonds[j][i] = b;
}

CoxeterDiagram diagram_from_roots(const ZForm& form, const std::vector<ZVec>& roots,
                                  const std::vector<std::string>& names)
{
    if (names.size() != roots.size())
        throw PreconditionError("one name per root is required");
    CoxeterDiagram d;
    for (std::size_t i = 0; i < roots.size(); ++i)
        d.add_node(names[i], Rational(norm(form, roots[i])));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            d.set_bond(i, j, angle_label(form, roots[i], roots[j]));
    return d;
}

CoxeterDiagram diagram_from_roots(const std::vector<QVec>& roots, const std::vector<std::string>& names)
{
    if (names.size() != roots.size())
        throw PreconditionError("one name per root is required");
    CoxeterDiagram d;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        QuadScalar n = minkowski_product(roots[i], roots[i]);
        if (!n.is_rational())
            throw PreconditionError("root norm is irrational");
        d.add_node(names[i], n.a);
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            d.set_bond(i, j, angle_label(roots[i], roots[j]));
    return d;
}

// ---------------------------------------------------------------------------

std::string Component::name() const
{
    std::string s = affine ? "~" : "";
    if (family == 'I')
        return s + "I2(" + std::to_string(m) + ")";
    return s + family + std::to_string(rank);
}

namespace {

struct Arm {
    std::size_t length = 0;
    std::vector<int> labels; // starting from the branch node
};

Arm walk_arm(const std::vector<std::vector<std::size_t>>& adj, const CoxeterDiagram& d, std::size_t from,
             std::size_t next)
{
    Arm arm;
    std::size_t prev = from, cur = next;
    for (;;) {
        arm.labels.push_back(coxeter_m(d.bond(prev, cur)));
        ++arm.length;
        std::size_t nxt = prev;
        for (auto w : adj[cur])
            if (w != prev)
                nxt = w;
        if (nxt == prev || adj[cur].size() != 2)
            break;
        prev = cur;
        cur = nxt;
    }
    return arm;
}

Component make(char f, int rank, bool affine) { return Component{f, rank, 0, affine}; }

} // namespace

std::optional<Component> classify_connected(const CoxeterDiagram& d)
{
    std::size_t n = d.size();
    if (n == 0)
        return std::nullopt;
    if (n == 1)
        return make('A', 1, false);
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edges = 0;
    int count4 = 0, count6 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Bond b = d.bond(i, j);
            if (b == Bond::Orthogonal)
                continue;
            if (b == Bond::Ultraparallel)
                return std::nullopt;
            if (b == Bond::Parallel) {
                if (n == 2)
                    return make('A', 1, true);
                return std::nullopt;
            }
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
            count4 += b == Bond::Pi4;
            count6 += b == Bond::Pi6;
        }
    // connectivity
    {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != n)
            throw PreconditionError("classify_connected needs a connected diagram");
    }
    int ni = static_cast<int>(n);
    if (edges == n) {
        bool cycle = n >= 3 && count4 == 0 && count6 == 0;
        for (auto& a : adj)
            cycle = cycle && a.size() == 2;
        if (cycle)
            return make('A', ni - 1, true);
        return std::nullopt;
    }
    if (edges != n - 1)
        return std::nullopt;

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i)
        if (adj[i].size() >= 3)
            branch.push_back(i);

    if (branch.empty()) {
        std::size_t end = 0;
        while (adj[end].size() != 1)
            ++end;
        std::vector<int> L = walk_arm(adj, d, end, adj[end][0]).labels;
        if (n == 2) {
            if (L[0] == 3)
                return make('A', 2, false);
            if (L[0] == 4)
                return make('B', 2, false);
            return make('G', 2, false);
        }
        if (count6 == 0 && count4 == 0)
            return make('A', ni, false);
        if (count6 == 0 && count4 == 1) {
            std::size_t p = std::find(L.begin(), L.end(), 4) - L.begin();
            if (p == 0 || p == L.size() - 1)
                return make('B', ni, false);
            if (n == 4)
                return make('F', 4, false);
            if (n == 5)
                return make('F', 4, true);
            return std::nullopt;
        }
        if (count6 == 0 && count4 == 2 && L.front() == 4 && L.back() == 4)
            return make('C', ni - 1, true);
        if (count6 == 1 && count4 == 0 && n == 3 && (L.front() == 6 || L.back() == 6))
            return make('G', 2, true);
        return std::nullopt;
    }
    if (count6 > 0)
        return std::nullopt;

    if (branch.size() == 1 && adj[branch[0]].size() == 4) {
        if (n == 5 && count4 == 0)
            return make('D', 4, true);
        return std::nullopt;
    }
    if (branch.size() == 1 && adj[branch[0]].size() == 3) {
        std::vector<Arm> arms;
        for (auto w : adj[branch[0]])
            arms.push_back(walk_arm(adj, d, branch[0], w));
        std::sort(arms.begin(), arms.end(), [](const Arm& x, const Arm& y) { return x.length < y.length; });
        std::size_t a = arms[0].length, b = arms[1].length, c = arms[2].length;
        if (count4 == 0) {
            if (a == 1 && b == 1)
                return make('D', ni, false);
            if (a == 1 && b == 2 && c <= 4)
                return make('E', ni, false);
            if (a == 2 && b == 2 && c == 2)
                return make('E', 6, true);
            if (a == 1 && b == 3 && c == 3)
                return make('E', 7, true);
            if (a == 1 && b == 2 && c == 5)
                return make('E', 8, true);
            return std::nullopt;
        }
        if (count4 == 1 && a == 1 && b == 1) {
            // the 4 must sit on the outer edge of some arm, the other two arms being single nodes
            for (std::size_t k = 0; k < 3; ++k) {
                const Arm& arm = arms[k];
                if (arm.labels.back() != 4)
                    continue;
                std::size_t others = 0;
                for (std::size_t t = 0; t < 3; ++t)
                    if (t != k && arms[t].length == 1)
                        ++others;
                if (others == 2)
                    return make('B', ni - 1, true);
            }
        }
        return std::nullopt;
    }
    if (branch.size() == 2 && count4 == 0 && adj[branch[0]].size() == 3 && adj[branch[1]].size() == 3) {
        for (auto bnode : branch) {
            int leaves = 0;
            for (auto w : adj[bnode])
                leaves += adj[w].size() == 1;
            if (leaves != 2)
                return std::nullopt;
        }
        return make('D', ni - 1, true);
    }
    return std::nullopt;
}

SubdiagramInfo classify_subdiagram(const CoxeterDiagram& d, std::uint32_t mask)
{
    SubdiagramInfo info;
    std::uint32_t left = mask;
    int nodes = 0, comps = 0;
    bool all_spherical = true, all_affine = true;
    while (left) {
        std::size_t start = std::countr_zero(left);
        std::vector<std::size_t> comp{start};
        left &= ~(1u << start);
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t w = 0; w < d.size(); ++w)
                if ((left >> w & 1u) && d.bond(comp[k], w) != Bond::Orthogonal) {
                    comp.push_back(w);
                    left &= ~(1u << w);
                }
        std::sort(comp.begin(), comp.end());
        auto c = classify_connected(d.induced(comp));
        if (!c)
            return SubdiagramInfo{};
        all_spherical = all_spherical && !c->affine;
        all_affine = all_affine && c->affine;
        info.components.push_back(*c);
        nodes += static_cast<int>(comp.size());
        ++comps;
    }
    std::sort(info.components.begin(), info.components.end());
    if (all_spherical) {
        info.kind = SubdiagramKind::Elliptic;
        info.rank = nodes;
    } else if (all_affine) {
        info.kind = SubdiagramKind::Parabolic;
        info.rank = nodes - comps;
    } else {
        info.kind = SubdiagramKind::Other;
        info.components.clear();
    }
    return info;
}

std::vector<SubdiagramInfo> classify_all_subdiagrams(const CoxeterDiagram& d)
{
    if (d.size() > 20)
        throw PreconditionError("subdiagram enumeration is limited to 20 nodes");
    std::uint32_t total = 1u << d.size();
    std::vector<SubdiagramInfo> out(total);
    for (std::uint32_t m = 0; m < total; ++m)
        out[m] = classify_subdiagram(d, m);
    return out;
}

std::optional<FiniteType> finite_type(const CoxeterDiagram& d)
{
    if (d.size() > 31)
        throw PreconditionError("diagram too large");
    std::uint32_t all = d.size() == 0 ? 0u : static_cast<std::uint32_t>((1ull << d.size()) - 1);
    SubdiagramInfo info = classify_subdiagram(d, all);
    if (info.kind != SubdiagramKind::Elliptic)
        return std::nullopt;
    return info.components;
}

std::string to_string(const FiniteType& t)
{
    if (t.empty())
        return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t k = i;
        while (k < t.size() && t[k] == t[i])
            ++k;
        if (i)
            os << "x";
        os << t[i].name();
        if (k - i > 1)
            os << "^" << (k - i);
        i = k;
    }
    return os.str();
}

namespace {

Integer factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

Integer weyl_order(const Component& c)
{
    if (c.affine)
        throw PreconditionError("affine Weyl groups are infinite");
    int n = c.rank;
    Integer two_n = Integer(1) << n;
    switch (c.family) {
    case 'A': return factorial(n + 1);
    case 'B': return two_n * factorial(n);
    case 'D': return (two_n / 2) * factorial(n);
    case 'E':
        if (n == 6)
            return 51840;
        if (n == 7)
            return 2903040;
        if (n == 8)
            return 696729600;
        break;
    case 'F': return 1152;
    case 'G': return 12;
    case 'H':
        if (n == 3)
            return 120;
        if (n == 4)
            return 14400;
        break;
    case 'I': return 2 * c.m;
    }
    throw PreconditionError("unknown finite type " + c.name());
}

Integer weyl_order(const FiniteType& t)
{
    Integer o = 1;
    for (const auto& c : t)
        o *= weyl_order(c);
    return o;
}

EulerCharacteristic euler_characteristic(const CoxeterDiagram& d)
{
    auto info = classify_all_subdiagrams(d);
    EulerCharacteristic e;
    e.by_size.assign(d.size() + 1, Rational(0));
    e.by_size[0] = 1;
    for (std::uint32_t m = 1; m < info.size(); ++m) {
        if (info[m].kind != SubdiagramKind::Elliptic)
            continue;
        int k = std::popcount(m);
        Rational term(1, 1);
        term /= Rational(weyl_order(info[m].components));
        if (k % 2)
            term = -term;
        e.by_size[k] += term;
    }
    e.chi = 0;
    for (const auto& t : e.by_size)
        e.chi += t;
    return e;
}

double volume_from_chi(const Rational& chi, int n)
{
    if (n <= 0 || n % 2)
        throw PreconditionError("volume formula needs an even dimension");
    // vol(S^n) / chi(S^n) = 2^n pi^(n/2) (n/2)! / n!
    double c = std::pow(2.0, n) * std::pow(std::numbers::pi, n / 2) * factorial(n / 2).get_d() / factorial(n).get_d();
    return std::abs(chi.get_d()) * c;
}

// ---------------------------------------------------------------------------

std::size_t WallClassification::discriminant_count() const
{
    return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), WallKind::Discriminant));
}

WallClassification classify_walls(const CoxeterDiagram& d)
{
    WallClassification w;
    for (const auto& n : d.norms)
        w.kinds.push_back(n == 1 || n == 3 ? WallKind::Discriminant : WallKind::Eckardt);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.bond(i, j) == Bond::Pi6)
                w.triple_bonds.emplace_back(i, j);
    return w;
}

WallClassification classify_walls(const ZForm& form, const std::vector<ZVec>& roots)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < roots.size(); ++i)
        names.push_back("v" + std::to_string(i));
    return classify_walls(diagram_from_roots(form, roots, names));
}

std::size_t Presentation::add_generator(const std::string& name)
{
    generators.push_back(name);
    return generators.size() - 1;
}

namespace {

std::string word_string(const std::vector<std::string>& gens, const Word& w)
{
    if (w.empty())
        return "1";
    // detect w = u^k
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (w.size() % len)
            continue;
        bool periodic = true;
        for (std::size_t i = len; i < w.size() && periodic; ++i)
            periodic = w[i] == w[i - len];
        if (periodic) {
            Word u(w.begin(), w.begin() + len);
            std::string inner = word_string(gens, u);
            if (len > 1)
                inner = "(" + inner + ")";
            return inner + "^" + std::to_string(w.size() / len);
        }
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += " ";
        s += gens[w[i].first];
        if (w[i].second != 1)
            s += "^" + std::to_string(w[i].second);
    }
    return s;
}

Word power(const Word& u, int k)
{
    Word w;
    for (int i = 0; i < k; ++i)
        w.insert(w.end(), u.begin(), u.end());
    return w;
}

} // namespace

std::string Presentation::to_string(const Relation& r) const
{
    return word_string(generators, r.lhs) + " = " + word_string(generators, r.rhs);
}

std::string Abelianization::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion) {
        os << (first ? "" : " x ") << "Z/" << t;
        first = false;
    }
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : " x ") << "Z";
        first = false;
    }
    if (first)
        os << "trivial";
    return os.str();
}

Abelianization abelianization(const Presentation& p)
{
    std::size_t n = p.generators.size();
    Abelianization ab;
    if (n == 0)
        return ab;
    Matrix<Integer> m(std::max<std::size_t>(p.relations.size(), 1), n);
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        for (const auto& [g, e] : p.relations[i].lhs)
            m(i, g) += e;
        for (const auto& [g, e] : p.relations[i].rhs)
            m(i, g) -= e;
    }
    auto diag = smith_diagonal(m);
    int nonzero = 0;
    for (const auto& d : diag)
        if (d != 0) {
            ++nonzero;
            if (d > 1)
                ab.torsion.push_back(d);
        }
    std::sort(ab.torsion.begin(), ab.torsion.end());
    ab.free_rank = static_cast<int>(n) - nonzero;
    return ab;
}

namespace {

Presentation presentation_on(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes, bool keep_triple)
{
    Presentation p;
    for (auto i : nodes)
        p.add_generator(d.names[i]);
    for (std::size_t a = 0; a < nodes.size(); ++a)
        p.relations.push_back({power({{a, 1}}, 2), {}});
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            Bond bond = d.bond(nodes[a], nodes[b]);
            int m = coxeter_m(bond);
            if (m == 0 || (bond == Bond::Pi6 && !keep_triple))
                continue;
            p.relations.push_back({power({{a, 1}, {b, 1}}, m), {}});
        }
    return p;
}

} // namespace

Presentation coxeter_presentation(const CoxeterDiagram& d)
{
    std::vector<std::size_t> all(d.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return presentation_on(d, all, true);
}

Presentation pi1_presentation(const CoxeterDiagram& d, const WallClassification& walls)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (walls.kinds[i] == WallKind::Eckardt)
            keep.push_back(i);
    return presentation_on(d, keep, false);
}

Presentation extend_by_automorphism(const Presentation& p, const CoxeterDiagram& d, const Permutation& perm,
                                    const std::string& name)
{
    Presentation q = p;
    std::size_t a = q.add_generator(name);
    q.relations.push_back({{{a, 1}, {a, 1}}, {}});
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        std::size_t node = d.index_of(p.generators[g]);
        const std::string& image = d.names[perm[node]];
        auto it = std::find(p.generators.begin(), p.generators.end(), image);
        if (it == p.generators.end())
            throw PreconditionError("automorphism does not preserve the generating set");
        std::size_t h = static_cast<std::size_t>(it - p.generators.begin());
        q.relations.push_back({{{a, 1}, {g, 1}, {a, -1}}, {{h, 1}}});
    }
    return q;
}

// ---------------------------------------------------------------------------

namespace {

void extend_iso(const CoxeterDiagram& a, const std::vector<int>& ca, const CoxeterDiagram& b,
                const std::vector<int>& cb, Permutation& f, std::vector<bool>& used, std::size_t i,
                std::vector<Permutation>& out)
{
    if (i == a.size()) {
        out.push_back(f);
        return;
    }
    for (std::size_t t = 0; t < b.size(); ++t) {
        if (used[t] || ca[i] != cb[t])
            continue;
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k)
            ok = a.bond(i, k) == b.bond(t, f[k]);
        if (!ok)
            continue;
        used[t] = true;
        f[i] = t;
        extend_iso(a, ca, b, cb, f, used, i + 1, out);
        used[t] = false;
    }
}

} // namespace

std::vector<Permutation> diagram_isomorphisms(const CoxeterDiagram& a, const std::vector<int>& color_a,
                                              const CoxeterDiagram& b, const std::vector<int>& color_b)
{
    std::vector<Permutation> out;
    if (a.size() != b.size())
        return out;
    Permutation f(a.size());
    std::vector<bool> used(b.size(), false);
    extend_iso(a, color_a, b, color_b, f, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> norm_colors(const CoxeterDiagram& d)
{
    std::vector<int> c;
    for (const auto& n : d.norms) {
        Rational x = n * 1000;
        c.push_back(static_cast<int>(x.get_d()));
    }
    return c;
}

std::vector<int> wall_colors(const CoxeterDiagram& d)
{
    std::vector<int> c;
    for (auto k : classify_walls(d).kinds)
        c.push_back(k == WallKind::Discriminant ? 1 : 0);
    return c;
}

std::vector<Permutation> diagram_automorphisms(const CoxeterDiagram& d)
{
    auto c = norm_colors(d);
    return diagram_isomorphisms(d, c, d, c);
}

bool is_isomorphic(const CoxeterDiagram& a, const CoxeterDiagram& b)
{
    return !diagram_isomorphisms(a, norm_colors(a), b, norm_colors(b)).empty();
}

std::string to_dot(const CoxeterDiagram& d, const std::string& title)
{
    std::ostringstream os;
    os << "graph \"" << title << "\" {\n";
    os << "  node [label=\"\", width=0.25, height=0.25];\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        const Rational& n = d.norms[i];
        std::string shape = (n == 1 || n == 2) ? "circle" : "doublecircle";
        bool filled = n == 1 || n == 3;
        os << "  \"" << d.names[i] << "\" [xlabel=\"" << d.names[i] << "\", shape=" << shape
           << (filled ? ", style=filled, fillcolor=black" : "") << ", tooltip=\"norm " << n.get_str() << "\"];\n";
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            std::string attr;
            switch (d.bond(i, j)) {
            case Bond::Orthogonal: continue;
            case Bond::Pi3: attr = "color=\"black\""; break;
            case Bond::Pi4: attr = "color=\"black:black\""; break;
            case Bond::Pi6: attr = "color=\"black:black:black\""; break;
            case Bond::Parallel: attr = "penwidth=4"; break;
            case Bond::Ultraparallel: attr = "style=dashed"; break;
            }
            os << "  \"" << d.names[i] << "\" -- \"" << d.names[j] << "\" [" << attr << "];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace cubic

#include "cubic/involution.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cubic {

F3Matrix reduce_mod_theta(const Matrix<Eisenstein>& m)
{
    return m.map([](const Eisenstein& x) { return reduce_mod_theta(x); });
}

F3Vec reduce_mod_theta(const EVec& v)
{
    F3Vec out;
    for (const auto& x : v)
        out.push_back(reduce_mod_theta(x));
    return out;
}

EVec AntiInvolution::apply(const EVec& x) const { return matrix * conj(x); }

Matrix<Eisenstein> AntiInvolution::square() const { return matrix * conj(matrix); }

AntiInvolution standard_chi(int j)
{
    if (j < 0 || j > 4)
        throw PreconditionError("chi_j is defined for j = 0..4");
    Matrix<Eisenstein> m = Matrix<Eisenstein>::identity(5);
    for (int i = 5 - j; i < 5; ++i)
        m(i, i) = Eisenstein(-1);
    return AntiInvolution{m};
}

Matrix<Eisenstein> unitary_inverse(const Matrix<Eisenstein>& g)
{
    Matrix<Eisenstein> j = hermitian_gram();
    return j * conj(g).transpose() * j;
}

AntiInvolution conjugate(const AntiInvolution& a, const Matrix<Eisenstein>& g)
{
    if (!UnitaryGenerator::is_unitary(g))
        throw PreconditionError("conjugating matrix does not preserve h");
    return AntiInvolution{g * a.matrix * conj(unitary_inverse(g))};
}

void validate(const AntiInvolution& a)
{
    if (a.matrix.rows() != 5 || a.matrix.cols() != 5)
        throw PreconditionError("anti-involutions are classified only in rank 5");
    Matrix<Eisenstein> j = hermitian_gram();
    if (!(a.matrix.transpose() * j * conj(a.matrix) == j))
        throw PreconditionError("matrix does not preserve h");
    Matrix<Eisenstein> sq = a.square();
    Matrix<Eisenstein> id = Matrix<Eisenstein>::identity(5);
    if (!(sq == id) && !(sq == -id))
        throw PreconditionError("matrix is not a projective involution");
}

std::string InvolutionClass::name() const
{
    return std::string(sign > 0 ? "" : "-") + "chi" + std::to_string(j);
}

F3QuadSpace F3QuadSpace::standard()
{
    F3QuadSpace v;
    v.q = F3Matrix::diagonal({F3(-1), F3(1), F3(1), F3(1), F3(1)});
    return v;
}

F3 F3QuadSpace::product(const F3Vec& x, const F3Vec& y) const { return pair(q, x, y); }

bool F3QuadSpace::preserves(const F3Matrix& g) const { return g.transpose() * q * g == q; }

int determinant_class(const F3QuadSpace& v, const std::vector<F3Vec>& basis)
{
    if (basis.empty())
        return 1;
    F3Matrix g(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            g(a, b) = v.product(basis[a], basis[b]);
    F3 d = determinant(g);
    if (d.is_zero())
        throw VerificationError("q is degenerate on an eigenspace");
    return d.balanced();
}

EigenInvariants eigen_invariants(const F3Matrix& action, const F3QuadSpace& v)
{
    F3Matrix id = F3Matrix::identity(action.rows());
    auto fixed = kernel(action - id);
    auto neg = kernel(action + id);
    if (fixed.size() + neg.size() != action.rows())
        throw PreconditionError("induced map on V is not an involution");
    EigenInvariants e;
    e.fixed_dim = static_cast<int>(fixed.size());
    e.negated_dim = static_cast<int>(neg.size());
    e.fixed_det = determinant_class(v, fixed);
    e.negated_det = determinant_class(v, neg);
    return e;
}

InvolutionClass classify_anti_involution(const AntiInvolution& a)
{
    validate(a);
    if (!(a.square() == Matrix<Eisenstein>::identity(5)))
        throw PreconditionError("no representative squares to the identity");
    // conjugation is trivial mod theta, so the induced map is F_3-linear
    EigenInvariants e = eigen_invariants(reduce_mod_theta(a.matrix));
    InvolutionClass c;
    if (e.fixed_det == -1) {
        c = {5 - e.fixed_dim, 1};
        if (e.negated_det != 1)
            throw VerificationError("eigenspace invariants match no class");
    } else {
        c = {e.fixed_dim, -1};
        if (e.negated_det != -1)
            throw VerificationError("eigenspace invariants match no class");
    }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

F3Vec normalize_projective(F3Vec v)
{
    for (const auto& x : v)
        if (!x.is_zero()) {
            if (x.value() == 2)
                for (auto& y : v)
                    y = -y;
            break;
        }
    return v;
}

int encode(const F3Vec& v)
{
    int code = 0;
    for (const auto& x : v)
        code = code * 3 + x.value();
    return code;
}

struct PlusData {
    std::vector<F3Vec> points;
    std::vector<std::array<int, 5>> bases;
    std::map<int, int> index; // encoded normalized vector -> index
};

const PlusData& plus_data()
{
    static const PlusData data = [] {
        PlusData d;
        F3QuadSpace v = F3QuadSpace::standard();
        for (int code = 1; code < 243; ++code) {
            F3Vec x(5);
            int c = code;
            for (int i = 4; i >= 0; --i) {
                x[i] = F3(c % 3);
                c /= 3;
            }
            if (!(normalize_projective(x) == x))
                continue;
            if (v.product(x, x) == F3(-1)) {
                d.index[encode(x)] = static_cast<int>(d.points.size());
                d.points.push_back(x);
            }
        }
        int n = static_cast<int>(d.points.size());
        std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                orth[a][b] = v.product(d.points[a], d.points[b]).is_zero();
        std::array<int, 5> cur{};
        auto rec = [&](auto&& self, int depth, int start) -> void {
            if (depth == 5) {
                d.bases.push_back(cur);
                return;
            }
            for (int t = start; t < n; ++t) {
                bool ok = true;
                for (int k = 0; k < depth && ok; ++k)
                    ok = orth[cur[k]][t];
                if (!ok)
                    continue;
                cur[depth] = t;
                self(self, depth + 1, t + 1);
            }
        };
        rec(rec, 0, 0);
        return d;
    }();
    return data;
}

} // namespace

const std::vector<F3Vec>& plus_points() { return plus_data().points; }

const std::vector<std::array<int, 5>>& bases() { return plus_data().bases; }

int plus_point_index(const F3Vec& v)
{
    const auto& idx = plus_data().index;
    auto it = idx.find(encode(normalize_projective(v)));
    return it == idx.end() ? -1 : it->second;
}

std::vector<int> plus_point_permutation(const F3Matrix& g)
{
    std::vector<int> img;
    for (const auto& p : plus_points()) {
        int i = plus_point_index(g * p);
        if (i < 0)
            throw PreconditionError("matrix does not preserve the plus-points");
        img.push_back(i);
    }
    return img;
}

std::vector<int> base_permutation(const F3Matrix& g)
{
    auto pp = plus_point_permutation(g);
    const auto& bs = bases();
    std::map<std::array<int, 5>, int> index;
    for (std::size_t i = 0; i < bs.size(); ++i)
        index[bs[i]] = static_cast<int>(i);
    std::vector<int> img;
    for (const auto& b : bs) {
        std::array<int, 5> c;
        for (int k = 0; k < 5; ++k)
            c[k] = pp[b[k]];
        std::sort(c.begin(), c.end());
        img.push_back(index.at(c));
    }
    return img;
}

LinesTritangents count_fixed_lines_tritangents(const F3Matrix& action)
{
    LinesTritangents lt;
    auto pp = plus_point_permutation(action);
    for (std::size_t i = 0; i < pp.size(); ++i)
        lt.tritangents += pp[i] == static_cast<int>(i);
    auto bp = base_permutation(action);
    for (std::size_t i = 0; i < bp.size(); ++i)
        lt.lines += bp[i] == static_cast<int>(i);
    return lt;
}

LinesTritangents count_real_lines_tritangents(const InvolutionClass& cls)
{
    if (cls.sign != 1)
        throw PreconditionError("line counts are defined for the classes chi_j");
    F3Matrix a = reduce_mod_theta(standard_chi(cls.j).matrix);
    return count_fixed_lines_tritangents(-a);
}

// ---------------------------------------------------------------------------

FixedLattice fixed_lattice(const AntiInvolution& a)
{
    validate(a);
    if (!(a.square() == Matrix<Eisenstein>::identity(5)))
        throw PreconditionError("fixed lattice needs a true involution");
    // x = sum (p_i + q_i w) e_i; columns: images of e_i and w e_i under x -> a(x) - x
    Matrix<Integer> lin(10, 10);
    for (std::size_t c = 0; c < 10; ++c) {
        EVec x(5, Eisenstein(0));
        x[c / 2] = (c % 2 == 0) ? Eisenstein(1) : Eisenstein::omega();
        EVec y = sub(a.apply(x), x);
        for (std::size_t i = 0; i < 5; ++i) {
            lin(2 * i, c) = y[i].a;
            lin(2 * i + 1, c) = y[i].b;
        }
    }
    auto ker = integer_kernel(lin);
    if (ker.size() != 5)
        throw VerificationError("fixed lattice does not have rank 5");
    std::vector<EVec> basis;
    for (const auto& k : ker) {
        EVec x(5);
        for (std::size_t i = 0; i < 5; ++i)
            x[i] = Eisenstein(k[2 * i], k[2 * i + 1]);
        basis.push_back(x);
    }
    auto gram_of = [](const std::vector<EVec>& b) {
        Matrix<Integer> g(b.size(), b.size());
        for (std::size_t s = 0; s < b.size(); ++s)
            for (std::size_t t = 0; t < b.size(); ++t) {
                Eisenstein h = hermitian_product(b[s], b[t]);
                if (h.b != 0)
                    throw VerificationError("h is not real on the fixed lattice");
                g(s, t) = h.a;
            }
        return g;
    };
    Matrix<Integer> g = gram_of(basis);
    FixedLattice fl{basis, ZForm(g)};
    if (fl.gram.is_diagonal()) {
        std::vector<std::size_t> order(5);
        for (std::size_t i = 0; i < 5; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return g(x, x) < g(y, y); });
        std::vector<EVec> sorted;
        for (auto i : order)
            sorted.push_back(basis[i]);
        fl = FixedLattice{sorted, ZForm(gram_of(sorted))};
    }
    return fl;
}

LatticeInvariants lattice_invariants(const ZForm& f)
{
    LatticeInvariants inv;
    inv.determinant = determinant(f);
    inv.signature = signature(f);
    for (const auto& d : smith_diagonal(f.gram))
        inv.three_rank += d == 3;
    return inv;
}

namespace {

ZVec canonical_sign(ZVec v)
{
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0)
                for (auto& y : v)
                    y = -y;
            break;
        }
    return v;
}

void box_vectors(std::size_t n, int bound, ZVec& cur, std::size_t i, std::vector<ZVec>& out)
{
    if (i == n) {
        out.push_back(cur);
        return;
    }
    for (int y = -bound; y <= bound; ++y) {
        cur[i] = y;
        box_vectors(n, bound, cur, i + 1, out);
    }
}

} // namespace

DiscriminantComponents discriminant_components(const ZForm& form, int bound)
{
    if (bound < 1)
        throw PreconditionError("coordinate bound must be positive");
    std::size_t n = form.dimension();
    std::vector<ZVec> box;
    ZVec cur(n, 0);
    box_vectors(n, bound, cur, 0, box);
    DiscriminantComponents out;
    std::set<ZVec> h3;
    std::vector<ZVec> short_roots, long_roots;
    for (const auto& v : box) {
        if (!is_root(form, v))
            continue;
        Integer q = norm(form, v);
        if (q == 1 || q == 3)
            h3.insert(canonical_sign(v));
        if (q == 2 && canonical_sign(v) == v)
            short_roots.push_back(v);
        if (q == 6)
            long_roots.push_back(v);
    }
    out.norm13_roots.assign(h3.begin(), h3.end());
    std::set<std::vector<ZVec>> systems;
    for (const auto& r : short_roots)
        for (const auto& s : long_roots) {
            if (inner_product(form, r, s) != -3)
                continue;
            std::set<ZVec> sys;
            std::vector<ZVec> todo{r, s};
            while (!todo.empty()) {
                ZVec x = todo.back();
                todo.pop_back();
                if (!sys.insert(x).second)
                    continue;
                todo.push_back(reflect(form, r, x));
                todo.push_back(reflect(form, s, x));
            }
            if (sys.size() != 12)
                throw VerificationError("G2 closure did not give 12 roots");
            systems.insert(std::vector<ZVec>(sys.begin(), sys.end()));
        }
    out.g2_systems.assign(systems.begin(), systems.end());
    return out;
}

// ---------------------------------------------------------------------------

UnitaryGenerator::UnitaryGenerator(std::uint32_t seed) : rng_(seed)
{
    std::vector<Eisenstein> small{Eisenstein(0), Eisenstein(1), Eisenstein(-1), Eisenstein::omega(),
                                  -Eisenstein::omega(), Eisenstein(-1) - Eisenstein::omega(),
                                  Eisenstein(1) + Eisenstein::omega()};
    EVec v(5);
    for (int code = 0; code < 7 * 7 * 7 * 7 * 7; ++code) {
        int c = code;
        for (int i = 0; i < 5; ++i) {
            v[i] = small[c % 7];
            c /= 7;
        }
        Integer n = hermitian_norm(v);
        if (n == 1)
            norm1_.push_back(v);
        else if (n == 2)
            norm2_.push_back(v);
    }
}

bool UnitaryGenerator::is_unitary(const Matrix<Eisenstein>& g)
{
    Matrix<Eisenstein> j = hermitian_gram();
    return g.rows() == 5 && g.cols() == 5 && g.transpose() * j * conj(g) == j;
}

namespace {

// x -> x - c h(x, r) r with h(x, r) = conj(r)^T J x
Matrix<Eisenstein> complex_reflection(const EVec& r, const Eisenstein& c)
{
    Matrix<Eisenstein> j = hermitian_gram();
    Matrix<Eisenstein> m = Matrix<Eisenstein>::identity(5);
    EVec rj = conj(r);
    for (std::size_t k = 0; k < 5; ++k)
        rj[k] = rj[k] * j(k, k);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b)
            m(a, b) -= c * r[a] * rj[b];
    return m;
}

} // namespace

Matrix<Eisenstein> UnitaryGenerator::next(int length)
{
    Matrix<Eisenstein> g = Matrix<Eisenstein>::identity(5);
    std::vector<Eisenstein> units{Eisenstein(1),  Eisenstein(-1), Eisenstein::omega(), -Eisenstein::omega(),
                                  Eisenstein(-1) - Eisenstein::omega(), Eisenstein(1) + Eisenstein::omega()};
    Eisenstein one_minus_w = Eisenstein(1) - Eisenstein::omega();
    for (int step = 0; step < length; ++step) {
        Matrix<Eisenstein> f;
        switch (rng_() % 5) {
        case 0: f = complex_reflection(norm1_[rng_() % norm1_.size()], Eisenstein(2)); break;
        case 1: f = complex_reflection(norm2_[rng_() % norm2_.size()], Eisenstein(1)); break;
        case 2: f = complex_reflection(norm1_[rng_() % norm1_.size()], one_minus_w); break;
        case 3: {
            f = Matrix<Eisenstein>::identity(5);
            for (std::size_t i = 0; i < 5; ++i)
                f(i, i) = units[rng_() % units.size()];
            break;
        }
        default: {
            std::vector<std::size_t> p{1, 2, 3, 4};
            std::shuffle(p.begin(), p.end(), rng_);
            f = Matrix<Eisenstein>(5, 5);
            f(0, 0) = Eisenstein(1);
            for (std::size_t i = 0; i < 4; ++i)
                f(p[i], i + 1) = Eisenstein(1);
        }
        }
        g = f * g;
    }
    return g;
}

} // namespace cubic

#include "cubic/chamber.hpp"

#include <algorithm>

namespace cubic {

namespace {

ZVec v(std::initializer_list<long> xs)
{
    ZVec out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace

const std::vector<ZVec>& standard_roots(int j)
{
    static const std::vector<std::vector<ZVec>> table = {
        {v({0, 1, -1, 0, 0}), v({0, 0, 1, -1, 0}), v({0, 0, 0, 1, -1}), v({0, 0, 0, 0, 1}), v({1, -1, -1, -1, 0})},
        {v({0, 1, -1, 0, 0}), v({0, 0, 1, -1, 0}), v({0, 0, 0, 1, 0}), v({0, 0, 0, 0, 1}), v({1, 0, 0, 0, -1}),
         v({1, -1, -1, -1, 0}), v({3, -3, 0, 0, -1})},
        {v({0, 1, -1, 0, 0}), v({0, 0, 1, 0, 0}), v({0, 0, 0, -1, 1}), v({0, 0, 0, 1, 0}), v({1, 0, 0, 0, -1}),
         v({1, -1, -1, 0, 0}), v({3, -3, 0, -1, -1})},
        {v({0, 1, 0, 0, 0}), v({0, 0, 0, -1, 1}), v({0, 0, -1, 1, 0}), v({0, 0, 1, 0, 0}), v({1, 0, 0, 0, -1}),
         v({3, -3, 0, -1, -1}), v({3, -1, -1, -1, -1})},
        {v({0, 0, 0, -1, 1}), v({0, 0, -1, 1, 0}), v({0, -1, 1, 0, 0}), v({0, 1, 0, 0, 0}), v({1, 0, 0, 0, -1}),
         v({3, -1, -1, -1, -1})},
    };
    if (j < 0 || j > 4)
        throw PreconditionError("chambers are numbered 0..4");
    return table[j];
}

const ZVec& Chamber::root(int k) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == k)
            return roots[i];
    throw PreconditionError("no wall r" + std::to_string(k) + " in W" + std::to_string(j));
}

Matrix<Integer> automorphism_matrix(const ZForm& form, const std::vector<ZVec>& roots, const Permutation& perm)
{
    std::vector<Vec<Rational>> src, dst;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        src.push_back(to_rational(roots[i]));
        dst.push_back(to_rational(roots[perm[i]]));
    }
    Matrix<Rational> m = solve_linear_map(src, dst);
    Matrix<Integer> z(m.rows(), m.cols());
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) {
            if (!is_integer(m(a, b)))
                throw VerificationError("diagram automorphism is not integral");
            z(a, b) = m(a, b).get_num();
        }
    if (!(z.transpose() * form.gram * z == form.gram))
        throw VerificationError("diagram automorphism does not preserve the form");
    return z;
}

Chamber build_chamber(int j)
{
    const auto& ref = standard_roots(j);
    ZForm form = psi(j);
    VinbergResult res = run_vinberg(form);
    std::vector<ZVec> got = res.roots, want = ref;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
        throw VerificationError("Vinberg chamber for psi" + std::to_string(j) + " differs from the standard chamber");
    Chamber c;
    c.j = j;
    c.form = form;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        c.labels.push_back(static_cast<int>(k + 1));
        c.roots.push_back(ref[k]);
        names.push_back("r" + std::to_string(k + 1));
    }
    c.diagram = diagram_from_roots(form, c.roots, names);
    c.automorphisms = diagram_automorphisms(c.diagram);
    for (const auto& p : c.automorphisms)
        c.automorphism_matrices.push_back(automorphism_matrix(form, c.roots, p));
    return c;
}

} // namespace cubic

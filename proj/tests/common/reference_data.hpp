#pragma once

// Published reference values for the five real components and the glued
// polyhedron Q, shared by the unit tests and the acceptance run.

#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cubic/coxeter.hpp"
#include "cubic/gluing.hpp"

namespace cubic::reference {

// "0,0,-t,t,0" with t = theta
inline EVec parse_lambda(const std::string& s)
{
    EVec v;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "t")
            v.push_back(Eisenstein::theta());
        else if (tok == "-t")
            v.push_back(-Eisenstein::theta());
        else
            v.push_back(Eisenstein(std::stol(tok)));
    }
    return v;
}

struct NodeRef {
    int k;
    std::string lambda;
    long norm;
};

struct BondRef {
    int a, b;
    Bond bond;
};

struct ChamberRef {
    std::vector<NodeRef> nodes;
    std::vector<BondRef> bonds;
};

// Simple roots in Lambda-coordinates, node norms and all non-orthogonal pairs.
inline const ChamberRef chamber_refs[] = {
    {{{1, "0,1,-1,0,0", 2}, {2, "0,0,1,-1,0", 2}, {3, "0,0,0,1,-1", 2}, {4, "0,0,0,0,1", 1}, {5, "1,-1,-1,-1,0", 2}},
     {{5, 3, Bond::Pi3}, {3, 2, Bond::Pi3}, {2, 1, Bond::Pi3}, {3, 4, Bond::Pi4}}},
    {{{1, "0,1,-1,0,0", 2},
      {2, "0,0,1,-1,0", 2},
      {3, "0,0,0,1,0", 1},
      {4, "0,0,0,0,t", 3},
      {5, "1,0,0,0,-t", 2},
      {6, "1,-1,-1,-1,0", 2},
      {7, "3,-3,0,0,-t", 3}},
     {{3, 6, Bond::Pi4},
      {3, 2, Bond::Pi4},
      {6, 5, Bond::Pi3},
      {2, 1, Bond::Pi3},
      {4, 7, Bond::Parallel},
      {5, 4, Bond::Ultraparallel},
      {7, 1, Bond::Ultraparallel}}},
    {{{1, "0,1,-1,0,0", 2},
      {2, "0,0,1,0,0", 1},
      {3, "0,0,0,-t,t", 6},
      {4, "0,0,0,t,0", 3},
      {5, "1,0,0,0,-t", 2},
      {6, "1,-1,-1,0,0", 1},
      {7, "3,-3,0,-t,-t", 6}},
     {{4, 3, Bond::Pi4},
      {4, 7, Bond::Pi4},
      {3, 5, Bond::Pi6},
      {7, 1, Bond::Pi6},
      {6, 2, Bond::Parallel},
      {5, 6, Bond::Pi4},
      {2, 1, Bond::Pi4}}},
    {{{1, "0,1,0,0,0", 1},
      {2, "0,0,0,-t,t", 6},
      {3, "0,0,-t,t,0", 6},
      {4, "0,0,t,0,0", 3},
      {5, "1,0,0,0,-t", 2},
      {6, "3,-3,0,-t,-t", 6},
      {7, "3,-1,-t,-t,-t", 1}},
     {{5, 2, Bond::Pi6},
      {2, 3, Bond::Pi3},
      {3, 4, Bond::Pi4},
      {4, 7, Bond::Ultraparallel},
      {7, 1, Bond::Parallel},
      {1, 6, Bond::Ultraparallel},
      {6, 3, Bond::Pi3}}},
    {{{1, "0,0,0,-t,t", 6},
      {2, "0,0,-t,t,0", 6},
      {3, "0,-t,t,0,0", 6},
      {4, "0,t,0,0,0", 3},
      {5, "1,0,0,0,-t", 2},
      {6, "3,-t,-t,-t,-t", 3}},
     {{5, 1, Bond::Pi6}, {1, 2, Bond::Pi3}, {2, 3, Bond::Pi3}, {3, 4, Bond::Pi4}, {4, 6, Bond::Parallel}}},
};

// Small diagrams: node letters, solid (discriminant) nodes and bonds.
struct SmallDiagram {
    std::string nodes, solid;
    std::vector<std::tuple<char, char, Bond>> bonds;
};
inline const SmallDiagram small_diagrams[] = {
    {"ABCDE", "E", {{'A', 'B', Bond::Pi3}, {'B', 'C', Bond::Pi3}, {'C', 'D', Bond::Pi3}, {'B', 'E', Bond::Pi4}}},
    {"ABCDEFG",
     "ADE",
     {{'A', 'B', Bond::Pi4}, {'A', 'G', Bond::Pi4}, {'B', 'C', Bond::Pi3}, {'G', 'F', Bond::Pi3}, {'D', 'E', Bond::Parallel},
      {'C', 'D', Bond::Ultraparallel}, {'E', 'F', Bond::Ultraparallel}}},
    {"ABCDEFG",
     "ADE",
     {{'A', 'B', Bond::Pi4}, {'A', 'G', Bond::Pi4}, {'B', 'C', Bond::Pi6}, {'G', 'F', Bond::Pi6}, {'D', 'E', Bond::Parallel},
      {'C', 'D', Bond::Pi4}, {'E', 'F', Bond::Pi4}}},
    {"ABCDEFG",
     "DEF",
     {{'A', 'B', Bond::Pi6}, {'B', 'C', Bond::Pi3}, {'C', 'D', Bond::Pi4}, {'D', 'E', Bond::Ultraparallel},
      {'E', 'F', Bond::Parallel}, {'F', 'G', Bond::Ultraparallel}, {'G', 'C', Bond::Pi3}}},
    {"ABCDEF", "EF", {{'A', 'B', Bond::Pi6}, {'B', 'C', Bond::Pi3}, {'C', 'D', Bond::Pi3}, {'D', 'E', Bond::Pi4}, {'E', 'F', Bond::Parallel}}},
};

inline CoxeterDiagram make_diagram(const std::string& nodes, const std::string& solid,
                            const std::vector<std::tuple<char, char, Bond>>& bonds)
{
    CoxeterDiagram d;
    for (char c : nodes)
        d.add_node(std::string(1, c), Rational(solid.find(c) == std::string::npos ? 2 : 1));
    for (const auto& [a, b, bond] : bonds)
        d.set_bond(d.index_of(std::string(1, a)), d.index_of(std::string(1, b)), bond);
    return d;
}

inline std::vector<int> solid_colors(const CoxeterDiagram& d, const std::string& solid)
{
    std::vector<int> c;
    for (const auto& n : d.names)
        c.push_back(solid.find(n[0]) == std::string::npos ? 0 : 1);
    return c;
}

inline QuadScalar q(long a, long b = 0) { return QuadScalar(Rational(a), Rational(b)); }
inline Eisenstein e(long a, long b = 0) { return Eisenstein{Integer(a), Integer(b)}; }

inline const RealQuadMatrix S_ref = {
    {q(3), q(2), q(1), q(0), q(0, -1)},  {q(-2), q(-1), q(-1), q(0), q(0, 1)}, {q(-1), q(-1), q(-1), q(0), q(0)},
    {q(0), q(0), q(0), q(1), q(0)},      {q(0, 1), q(0, 1), q(0), q(0), q(-1)},
};

inline const RealQuadMatrix tau_ref = {
    {q(7, 3), q(3, 1), q(-3, -2), q(-3, -2), q(-3, -2)},
    {q(3, 1), q(1), q(-1, -1), q(-1, -1), q(-1, -1)},
    {q(3, 2), q(1, 1), q(-1, -1), q(-2, -1), q(-2, -1)},
    {q(3, 2), q(1, 1), q(-2, -1), q(-1, -1), q(-2, -1)},
    {q(3, 2), q(1, 1), q(-2, -1), q(-2, -1), q(-1, -1)},
};

inline const Matrix<Eisenstein> gamma_ref = {
    {e(10, 6), e(4, 2), e(1, -4), e(1, -4), e(1, -4)},
    {e(2, -2), e(1), e(-2, -2), e(-2, -2), e(-2, -2)},
    {e(1, -4), e(0, -2), e(-2, -2), e(-3, -2), e(-3, -2)},
    {e(1, -4), e(0, -2), e(-3, -2), e(-2, -2), e(-3, -2)},
    {e(1, -4), e(0, -2), e(-3, -2), e(-3, -2), e(-2, -2)},
};

struct WallRef {
    std::string name;
    QVec root;
    std::set<std::string> provenance;
};

inline const std::vector<WallRef>& wall_refs()
{
    static const std::vector<WallRef> refs = {
        {"A", {q(3), q(-1), q(0, 1), q(0, 1), q(0, 1)}, {"P37"}},
        {"B", {q(0, 1), q(1), q(1), q(1), q(1)}, {"P46"}},
        {"C", {q(1), q(-1), q(-1), q(-1), q(0)}, {"P05", "P16", "P02'", "P33'", "P42'"}},
        {"D", {q(0, 1), q(0, -1), q(0), q(1), q(1)}, {"P27", "P36", "P03'", "P32'", "P41'"}},
        {"E", {q(0), q(1), q(-1), q(0), q(0)}, {"P01", "P11", "P21", "P43", "P35'", "P45'"}},
        {"E'", {q(1), q(0), q(0), q(0), q(0, 1)}, {"P15", "P25", "P35", "P45", "P01'", "P43'"}},
        {"D'", {q(0), q(0), q(0), q(1), q(-1)}, {"P03", "P23", "P32", "P41", "P36'"}},
        {"C'", {q(0), q(0), q(1), q(-1), q(0)}, {"P02", "P12", "P33", "P42", "P05'"}},
        {"B'", {q(3, 2), q(-2, -1), q(-2, -1), q(1), q(2, 1)}, {"P46'"}},
        {"A'", {q(4, 1), q(-2, -1), q(-2, -1), q(0, 1), q(0, 1)}, {"P37'"}},
    };
    return refs;
}

// Lines and tritangent planes, Euler characteristics, volumes and volume
// fractions (percent) for j = 0..4.
inline const int real_lines[] = {27, 15, 7, 3, 3};
inline const int real_tritangents[] = {45, 15, 5, 7, 13};
inline const Rational orbifold_chi[] = {Rational(1, 1920), Rational(1, 288), Rational(5, 576), Rational(1, 96),
                                        Rational(1, 384)};
inline const double volumes[] = {.00685, .04569, .11423, .13708, .03427};
inline const double volume_percent[] = {2.03, 13.51, 33.78, 40.54, 10.14};

} // namespace cubic::reference

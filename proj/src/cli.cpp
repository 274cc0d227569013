#include "cubic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "cubic/io.hpp"

namespace cubic {

namespace {

constexpr int kSchema = 1;

struct Emit {
    Json json;
    std::string dot; // empty when the command has no diagram
    int exit_code = 0;
};

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PreconditionError("malformed JSON in " + path + ": " + e.what());
    }
}

int form_index(const std::string& name)
{
    form_by_name(name); // validates
    return name[3] - '0';
}

std::string wall_kind_name(WallKind k) { return k == WallKind::Discriminant ? "discriminant" : "eckardt"; }

double round6(double x) { return std::round(x * 1e6) / 1e6; }

Json presentation_json(const Presentation& p)
{
    Json rel = Json::array();
    for (const auto& r : p.relations)
        rel.push_back(p.to_string(r));
    return Json{{"generators", p.generators}, {"relations", rel}, {"abelianization", abelianization(p).to_string()}};
}

// pi_1 of the smooth locus: Eckardt generators, extended by the diagram
// automorphism when there is one.
Presentation smooth_pi1(const Chamber& c)
{
    Presentation p = pi1_presentation(c.diagram, classify_walls(c.diagram));
    for (std::size_t a = 1; a < c.automorphisms.size(); ++a)
        p = extend_by_automorphism(p, c.diagram, c.automorphisms[a], a == 1 ? "a" : "a" + std::to_string(a));
    return p;
}

Json chamber_json(const Chamber& c)
{
    Json roots = Json::array();
    WallClassification walls = classify_walls(c.diagram);
    for (std::size_t i = 0; i < c.roots.size(); ++i)
        roots.push_back(Json{{"name", c.diagram.names[i]},
                             {"z", to_json(c.roots[i])},
                             {"lambda", to_json(to_lambda(c.j, c.roots[i]))},
                             {"norm", to_json(norm(c.form, c.roots[i]))},
                             {"kind", wall_kind_name(walls.kinds[i])}});
    return Json{{"form", "psi" + std::to_string(c.j)}, {"ring", "Z[omega]"}, {"roots", roots},
                {"diagram", to_json(c.diagram)}, {"diagram_automorphisms", c.automorphisms.size()}};
}

struct EulerRow {
    Rational chi_chamber;
    Rational chi;
    std::vector<Rational> partial;
    std::size_t automorphisms = 1;
    double volume = 0;
};

EulerRow euler_row(const CoxeterDiagram& d, std::size_t automorphisms)
{
    EulerCharacteristic e = euler_characteristic(d);
    EulerRow r;
    r.chi_chamber = e.chi;
    r.automorphisms = automorphisms;
    r.chi = Rational(e.chi / static_cast<long>(automorphisms));
    r.partial = e.by_size;
    r.volume = volume_from_chi(r.chi);
    return r;
}

Json euler_json(const EulerRow& r)
{
    Json partial = Json::array();
    std::size_t len = r.partial.size();
    while (len > 1 && r.partial[len - 1] == 0)
        --len;
    for (std::size_t i = 0; i < len; ++i)
        partial.push_back(r.partial[i].get_str());
    Rational pi2 = Rational(4 * abs(r.chi) / 3);
    return Json{{"chi", r.chi.get_str()},
                {"volume", round6(r.volume)},
                {"volume_over_pi_squared", pi2.get_str()},
                {"chi_chamber", r.chi_chamber.get_str()},
                {"diagram_automorphisms", r.automorphisms},
                {"partial_sums", partial}};
}

// ---------------------------------------------------------------------------

Emit cmd_vinberg(const std::string& form_name, const std::string& gram_path, int max_levels)
{
    Emit e;
    if (!gram_path.empty()) {
        ZForm form = form_from_json(read_json_file(gram_path));
        VinbergOptions opt;
        opt.max_levels = static_cast<std::size_t>(max_levels);
        VinbergResult res = run_vinberg(form, opt);
        Json roots = Json::array();
        WallClassification walls = classify_walls(res.diagram);
        for (std::size_t i = 0; i < res.roots.size(); ++i)
            roots.push_back(Json{{"name", res.diagram.names[i]},
                                 {"z", to_json(res.roots[i])},
                                 {"norm", to_json(norm(form, res.roots[i]))},
                                 {"kind", wall_kind_name(walls.kinds[i])},
                                 {"priority", res.priorities[i].get_str()}});
        e.json = Json{{"gram", to_json(form.gram)}, {"roots", roots}, {"levels", res.levels},
                      {"diagram", to_json(res.diagram)}};
        e.dot = to_dot(res.diagram, "vinberg");
        return e;
    }
    int j = form_index(form_name);
    Chamber c = build_chamber(j);
    e.json = chamber_json(c);
    e.json["finite_volume"] = finite_volume_test(c.diagram);
    e.json["pi1"] = presentation_json(smooth_pi1(c));
    e.dot = to_dot(c.diagram, "W" + std::to_string(j));
    return e;
}

Emit cmd_euler(const std::string& form_name, const std::string& gram_path)
{
    Emit e;
    if (!gram_path.empty()) {
        ZForm form = form_from_json(read_json_file(gram_path));
        VinbergResult res = run_vinberg(form);
        // only the reflection group is known here, so no automorphism quotient
        e.json = euler_json(euler_row(res.diagram, 1));
        e.json["gram"] = to_json(form.gram);
        return e;
    }
    int j = form_index(form_name);
    Chamber c = build_chamber(j);
    e.json = Json{{"form", form_name}};
    e.json.update(euler_json(euler_row(c.diagram, c.automorphisms.size())));
    return e;
}

Emit cmd_classify(const std::string& path)
{
    Emit e;
    AntiInvolution a{eisenstein_matrix_from_json(read_json_file(path))};
    if (a.matrix.rows() != 5)
        throw PreconditionError("only rank-5 anti-involutions are classified");
    validate(a);
    InvolutionClass cls = classify_anti_involution(a);
    EigenInvariants inv = eigen_invariants(reduce_mod_theta(a.matrix));
    FixedLattice fl = fixed_lattice(a);
    LatticeInvariants li = lattice_invariants(fl.gram);
    e.json = Json{{"ring", "Z[omega]"},
                  {"class", cls.name()},
                  {"j", cls.j},
                  {"sign", cls.sign},
                  {"invariants",
                   {{"fixed_dim", inv.fixed_dim},
                    {"fixed_det", inv.fixed_det},
                    {"negated_dim", inv.negated_dim},
                    {"negated_det", inv.negated_det}}},
                  {"fixed_lattice",
                   {{"basis", to_json(fl.basis)},
                    {"gram", to_json(fl.gram.gram)},
                    {"determinant", to_json(li.determinant)},
                    {"signature", to_json(li.signature)},
                    {"three_rank", li.three_rank}}}};
    return e;
}

Emit cmd_discriminant(const std::string& form_name, int bound)
{
    Emit e;
    int j = form_index(form_name);
    if (bound < 1 || bound > 6)
        throw PreconditionError("bound must lie in 1..6");
    Chamber c = build_chamber(j);
    WallClassification walls = classify_walls(c.diagram);
    Json w = Json::array();
    for (std::size_t i = 0; i < c.roots.size(); ++i)
        w.push_back(Json{{"name", c.diagram.names[i]}, {"kind", wall_kind_name(walls.kinds[i])}});
    Json triple = Json::array();
    for (const auto& [a, b] : walls.triple_bonds)
        triple.push_back(Json::array({c.diagram.names[a], c.diagram.names[b]}));
    DiscriminantComponents dc = discriminant_components(c.form, bound);
    Json g2 = Json::array();
    for (const auto& sys : dc.g2_systems)
        g2.push_back(to_json(sys));
    e.json = Json{{"form", form_name},
                  {"bound", bound},
                  {"walls", w},
                  {"triple_bonds", triple},
                  {"norm13_roots", to_json(dc.norm13_roots)},
                  {"g2_systems", g2}};
    e.dot = to_dot(c.diagram, "W" + std::to_string(j));
    return e;
}

Json monodromy_json(const MonodromyReport& m)
{
    Fingerprint f = m.group.fingerprint();
    Json orders = Json::object();
    for (const auto& [o, n] : f.element_orders)
        orders[std::to_string(o)] = n;
    auto sizes = [](const std::vector<std::vector<int>>& orbits) {
        Json a = Json::array();
        for (const auto& o : orbits)
            a.push_back(o.size());
        return a;
    };
    Json gens = Json::array();
    for (const auto& g : m.even_generators)
        gens.push_back(to_json(g));
    return Json{{"form", "psi" + std::to_string(m.j)},
                {"ring", "F3"},
                {"generators", gens},
                {"order", m.group.order()},
                {"name", m.name},
                {"fingerprint",
                 {{"element_orders", orders},
                  {"derived_series", f.derived_series},
                  {"abelianization", to_json(f.abelianization)}}},
                {"plus_point_orbits", sizes(m.group.plus_point_orbits())},
                {"base_orbits", sizes(m.group.base_orbits())}};
}

Emit cmd_monodromy(const std::string& form_name)
{
    Emit e;
    e.json = monodromy_json(monodromy_group(form_index(form_name)));
    return e;
}

Emit cmd_lines(const std::string& form_name)
{
    Emit e;
    InvolutionClass cls{form_index(form_name), 1};
    LinesTritangents lt = count_real_lines_tritangents(cls);
    e.json = Json{{"form", form_name}, {"class", cls.name()}, {"lines", lt.lines}, {"tritangents", lt.tritangents}};
    return e;
}

Json qvec_json(const QVec& v) { return to_json(v); }

Json poincare_json(const PoincareReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"checks", checks}, {"passed", r.passed()}, {"completeness", r.completeness}};
}

Json q_walls_json(const GluedPolyhedron& q)
{
    Json walls = Json::array();
    for (const auto& w : q.walls)
        walls.push_back(Json{{"name", w.name},
                             {"root", qvec_json(w.root)},
                             {"norm", to_json(minkowski_product(w.root, w.root))},
                             {"contains", w.provenance}});
    return walls;
}

Emit cmd_glue()
{
    Emit e;
    PlacedChambers placed = build_chambers();
    GluedPolyhedron q = assemble_q(placed);
    PoincareReport rep = verify_poincare(q);
    VolumeBookkeeping vb = q_volume_bookkeeping();
    Json coinc = Json::array();
    for (const auto& c : placed.coincidences)
        coinc.push_back(Json::array({c.first, c.second}));
    e.json = Json{{"ring", "Z[sqrt3]"},
                  {"coincidences", coinc},
                  {"walls", q_walls_json(q)},
                  {"diagram", to_json(q.diagram)},
                  {"S", to_json(q.S)},
                  {"tau", to_json(q.tau)},
                  {"tau_prime", to_json(q.tau_prime)},
                  {"wall_pairing", {{"ring", "Z[omega]"}, {"matrix", to_json(discriminant_wall_pairing())}}},
                  {"poincare", poincare_json(rep)},
                  {"presentation", presentation_json(presentation_pgamma_r(q, true))},
                  {"presentation_index2", presentation_json(presentation_pgamma_r(q, false))},
                  {"volume",
                   {{"chi_glued", vb.chi_glued.get_str()},
                    {"chi_quotients", vb.chi_quotients.get_str()},
                    {"volume", vb.volume}}}};
    e.dot = to_dot(q.diagram, "Q");
    e.exit_code = rep.passed() ? 0 : 2;
    return e;
}

Json certificate_json(const Certificate& c)
{
    return Json{{"ring", "Z[sqrt3]"},
                {"generators", c.generators},
                {"gamma", to_json(c.gamma)},
                {"traces", {{"tr_gamma", to_json(c.tr_gamma)}, {"tr_gamma_sq", to_json(c.tr_gamma_sq)},
                            {"tr_ad", to_json(c.tr_ad)}}},
                {"trace_field", c.trace_field},
                {"galois_form_signature", to_json(c.galois_form_signature)},
                {"verdict", c.verdict}};
}

Emit cmd_certify(const std::string& group)
{
    Emit e;
    if (group == "q") {
        e.json = certificate_json(nonarithmeticity_certificate());
        return e;
    }
    // the reflection group of one of the arithmetic chambers
    int j = form_index(group);
    if (j != 0)
        throw PreconditionError("only psi0 has its chamber in the Minkowski coordinates of Q");
    Chamber c = build_chamber(0);
    std::vector<std::string> names;
    std::vector<RealQuadMatrix> gens;
    for (std::size_t i = 0; i < c.roots.size(); ++i) {
        names.push_back(c.diagram.names[i]);
        gens.push_back(minkowski_reflection(to_real(0, c.roots[i])));
    }
    e.json = certificate_json(trace_certificate(names, gens, {0, 1, 2}));
    return e;
}

Emit cmd_tables()
{
    Emit e;
    Json t1 = Json::array(), t2 = Json::array(), fig1 = Json::array(), fig4 = Json::array();
    std::vector<EulerRow> rows;
    double total = 0;
    for (int j = 0; j < 5; ++j) {
        Chamber c = build_chamber(j);
        rows.push_back(euler_row(c.diagram, c.automorphisms.size()));
        total += rows.back().volume;
        LinesTritangents lt = count_real_lines_tritangents({j, 1});
        MonodromyReport m = monodromy_group(j);
        t1.push_back(Json{{"j", j}, {"lines", lt.lines}, {"tritangents", lt.tritangents}, {"monodromy", m.name},
                          {"monodromy_order", m.group.order()}});
        fig1.push_back(Json{{"j", j}, {"diagram", to_json(c.diagram)}, {"dot", to_dot(c.diagram, "W" + std::to_string(j))},
                            {"pi1", presentation_json(smooth_pi1(c))}});
        fig4.push_back(chamber_json(c));
    }
    for (int j = 0; j < 5; ++j) {
        Json r = euler_json(rows[j]);
        r["j"] = j;
        r["fraction_percent"] = std::round(rows[j].volume / total * 1e4) / 1e2;
        t2.push_back(r);
    }
    GluedPolyhedron q = assemble_q();
    e.json = Json{{"table1", t1},
                  {"table2", t2},
                  {"table3", {{"ring", "Z[sqrt3]"}, {"walls", q_walls_json(q)}}},
                  {"fig1", fig1},
                  {"fig3", {{"diagram", to_json(q.diagram)}, {"dot", to_dot(q.diagram, "Q")}}},
                  {"fig4", fig4}};
    return e;
}

// ---------------------------------------------------------------------------

bool is_flat(const Json& j, int depth)
{
    if (!j.is_structured())
        return true;
    if (!j.is_array() || depth == 0)
        return false;
    return std::all_of(j.begin(), j.end(), [&](const Json& x) { return is_flat(x, depth - 1); });
}

// Indented JSON with short arrays (vectors, matrices of pairs) kept on one line.
void pretty(const Json& j, int indent, std::ostringstream& os)
{
    if (is_flat(j, 3)) {
        os << j.dump();
        return;
    }
    std::string pad(indent + 2, ' ');
    bool obj = j.is_object();
    os << (obj ? "{" : "[");
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << (first ? "\n" : ",\n") << pad;
        first = false;
        if (obj)
            os << Json(it.key()).dump() << ": ";
        pretty(it.value(), indent + 2, os);
    }
    if (!first)
        os << "\n" << std::string(indent, ' ');
    os << (obj ? "}" : "]");
}

std::string dump(const Json& j)
{
    std::ostringstream os;
    pretty(j, 0, os);
    os << "\n";
    return os.str();
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string render(const Emit& e, const std::string& format, const std::string& command)
{
    if (format == "dot") {
        if (e.dot.empty())
            throw PreconditionError("command " + command + " has no DOT output");
        return e.dot;
    }
    Json out = Json{{"schema", kSchema}, {"command", command}};
    out.update(e.json);
    if (format == "text") {
        std::ostringstream os;
        flatten(out, "", os);
        return os.str();
    }
    return dump(out);
}

std::string error_json(const std::string& kind, const std::string& message)
{
    Json j = {{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}};
    return dump(j);
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args)
{
    CLI::App app{"Exact computations for the moduli of real cubic surfaces", "cubic"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "json", output;
    app.add_option("--format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("-o,--output", output, "write the artifact to this file");

    std::string form, gram, matrix, group = "q";
    int max_levels = 400, bound = 3;
    std::function<Emit()> action;
    std::string command;

    auto* vin = app.add_subcommand("vinberg", "simple roots and Coxeter diagram");
    auto* vf = vin->add_option("--form", form, "psi0..psi4");
    auto* vg = vin->add_option("--gram", gram, "JSON file with a diagonal Gram matrix");
    vf->excludes(vg);
    vin->add_option("--max-levels", max_levels, "priority levels before giving up");
    vin->callback([&] {
        if (form.empty() && gram.empty())
            throw PreconditionError("vinberg needs --form or --gram");
        action = [&] { return cmd_vinberg(form, gram, max_levels); };
    });

    auto* eul = app.add_subcommand("euler", "Euler characteristic and volume");
    auto* ef = eul->add_option("--form", form, "psi0..psi4");
    auto* eg = eul->add_option("--gram", gram, "JSON file with a diagonal Gram matrix");
    ef->excludes(eg);
    eul->callback([&] {
        if (form.empty() && gram.empty())
            throw PreconditionError("euler needs --form or --gram");
        action = [&] { return cmd_euler(form, gram); };
    });

    auto* cls = app.add_subcommand("classify", "classify an anti-involution x -> M conj(x)");
    cls->add_option("--matrix", matrix, "JSON file with M as [a, b] Eisenstein pairs")->required();
    cls->callback([&] { action = [&] { return cmd_classify(matrix); }; });

    auto* dis = app.add_subcommand("discriminant", "discriminant walls and G2 root systems");
    dis->add_option("--form", form, "psi0..psi4")->required();
    dis->add_option("--bound", bound, "coordinate bound for the root search");
    dis->callback([&] { action = [&] { return cmd_discriminant(form, bound); }; });

    auto* mon = app.add_subcommand("monodromy", "monodromy group in PO(V)");
    mon->add_option("--form", form, "psi0..psi4")->required();
    mon->callback([&] { action = [&] { return cmd_monodromy(form); }; });

    auto* lin = app.add_subcommand("lines", "real lines and tritangent planes");
    lin->add_option("--form", form, "psi0..psi4")->required();
    lin->callback([&] { action = [&] { return cmd_lines(form); }; });

    auto* glu = app.add_subcommand("glue", "assemble Q and verify the side pairings");
    glu->callback([&] { action = [&] { return cmd_glue(); }; });

    auto* cer = app.add_subcommand("certify", "trace-field certificate");
    cer->add_option("--group", group, "q (default) or psi0");
    cer->callback([&] { action = [&] { return cmd_certify(group); }; });

    auto* tab = app.add_subcommand("tables", "tables and figure data as one bundle");
    tab->callback([&] { action = [&] { return cmd_tables(); }; });

    CommandResult res;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        command = app.get_subcommands().front()->get_name();
        Emit e = action();
        res.output = render(e, format, command);
        res.exit_code = e.exit_code;
        if (!output.empty()) {
            std::ofstream out(output);
            if (!out)
                throw PreconditionError("cannot write " + output);
            out << res.output;
        }
    } catch (const CLI::CallForHelp&) {
        res.output = app.help();
        res.exit_code = 0;
    } catch (const CLI::CallForAllHelp&) {
        res.output = app.help("", CLI::AppFormatMode::All);
        res.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        res = {1, error_json("usage", e.what())};
    } catch (const PreconditionError& e) {
        res = {1, error_json("precondition", e.what())};
    } catch (const VerificationError& e) {
        res = {2, error_json("verification", e.what())};
    }
    return res;
}

} // namespace cubic

// Command-line front end. Verdicts go to stdout; the exit status is 0 when a
// command ran to completion (1 with --strict and a failing verdict), 2 for
// unreadable input, 3 for a violated precondition and 4 for an internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance/suite.hpp"
#include "ladders/club.hpp"
#include "ladders/cohen.hpp"
#include "ladders/diamond.hpp"
#include "ladders/error.hpp"
#include "ladders/extension.hpp"
#include "ladders/io.hpp"
#include "ladders/poset.hpp"
#include "ladders/random.hpp"
#include "ladders/rho.hpp"

using namespace ladders;

namespace {

enum Status { kOk = 0, kVerdictFailed = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

struct Options {
    bool strict = false;
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 1;
};

// Where artifacts go: --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError("not an integer list: " + text);
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

std::vector<std::string> parse_ids(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

TreeNode parse_tree_node(const std::string& text) {
    int level = 0, index = 0;
    char t = 0, dot = 0;
    std::istringstream is(text);
    if (!(is >> t >> level >> dot >> index) || t != 't' || dot != '.' || !is.eof())
        throw ParseError("tree node ids look like t<level>.<index>, got " + text);
    return {level, index};
}

void print_report(const Options& o, const Report& r) {
    if (o.format == "json")
        std::cout << report_to_json(r).dump(2) << '\n';
    else
        std::cout << r.to_text();
}

void print_reports(const Options& o, const std::vector<Report>& rs) {
    if (o.format == "json") {
        Json a = Json::array();
        for (const Report& r : rs) a.push_back(report_to_json(r));
        std::cout << a.dump(2) << '\n';
    } else {
        for (const Report& r : rs) std::cout << r.to_text();
    }
}

int verdict(const Options& o, bool passed) { return o.strict && !passed ? kVerdictFailed : kOk; }
bool all_passed(const std::vector<Report>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.passed(); });
}

void write_poset(const Options& o, const FinitePoset& p, const std::string& name) {
    Sink sink(o.out);
    if (o.format == "dot")
        sink.stream() << export_dot(p, name);
    else
        sink.stream() << poset_to_json(p).dump(2) << '\n';
}

FinitePoset read_poset(const std::string& path) {
    FinitePoset p = poset_from_json(read_json_file(path));
    if (!p.valid()) throw PreconditionError(path + " does not describe a partial order", validate_poset(p));
    return p;
}

// ---------------------------------------------------------------- commands

int cmd_check(const Options& o, const std::string& path, int ladder, bool want_breadth, bool want_lattice) {
    FinitePoset p = poset_from_json(read_json_file(path));
    Report valid = validate_poset(p);
    if (!valid.passed()) {
        print_report(o, valid);
        return verdict(o, false);
    }
    std::vector<Report> reports;
    std::vector<std::string> summary;
    bool ok = true;
    if (want_lattice) {
        reports.push_back(is_lattice(p));
        summary.push_back(std::string("lattice: ") + (reports.back().passed() ? "pass" : "fail"));
    }
    if (ladder > 0) {
        reports.push_back(is_n_ladder(p, ladder));
        summary.push_back(std::to_string(ladder) + "-ladder: " + (reports.back().passed() ? "pass" : "fail"));
    }
    if (want_breadth) {
        const int b = breadth(p);
        Report r("breadth");
        r.note("breadth", std::to_string(b));
        reports.push_back(r);
        summary.push_back("breadth: " + std::to_string(b));
    }
    if (reports.empty()) {
        reports.push_back(valid);
        summary.push_back("poset: pass");
    }
    ok = all_passed(reports);
    if (o.format == "json") {
        print_reports(o, reports);
    } else {
        std::string line;
        for (const auto& s : summary) line += (line.empty() ? "" : ", ") + s;
        std::cout << line << '\n';
        for (const Report& r : reports)
            if (!r.passed()) std::cout << r.to_text();
    }
    return verdict(o, ok);
}

int cmd_extend(const Options& o, const std::string& path, const std::string& subset, int n) {
    FinitePoset l = read_poset(path);
    Bits c = make_set(l, parse_ids(subset));
    ExtensionResult ext = extend_by_cofinal_copy(l, c, n);
    if (o.format == "dot") {
        write_poset(o, ext.extended, "extended");
    } else {
        Sink sink(o.out);
        sink.stream() << extension_to_json(ext).dump(2) << '\n';
    }
    return kOk;
}

int cmd_export(const Options& o, const std::string& path) {
    write_poset(o, read_poset(path), "poset");
    return kOk;
}

int cmd_rho_check(const Options& o, const std::string& path) {
    RhoTable t = rho_from_json(read_json_file(path));
    Report r = check_rho_axioms(t);
    print_report(o, r);
    return verdict(o, r.passed());
}

int cmd_rho_build(const Options& o, int levels, int window, int max_value) {
    Rng rng = Rng(o.seed).substream("rho-build");
    RhoTable t = build_rho(levels, window, random_f_family(rng, levels, window, max_value));
    Sink sink(o.out);
    sink.stream() << rho_to_json(t).dump(2) << '\n';
    return kOk;
}

int cmd_rho_witness(const Options& o, const std::string& path, const std::string& f_text, int height) {
    RhoTable t = rho_from_json(read_json_file(path));
    if (!check_rho_axioms(t).passed()) throw PreconditionError("rho witness: table fails the axioms");
    std::vector<int> f = parse_ints(f_text);
    if (static_cast<int>(f.size()) != t.window()) throw PreconditionError("rho witness: f must fill the window");
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] < f[i - 1]) throw PreconditionError("rho witness: f must be non-decreasing");
    Box box = default_box(t);
    box.height = height > 0 ? height : std::max(box.height, f.back() + t.window() + 2);
    Report r = nonmax_witness(t, f, box);
    print_report(o, r);
    return verdict(o, r.passed());
}

int cmd_rho_export_box(const Options& o, const std::string& path, int levels, int window, int height) {
    RhoTable t = rho_from_json(read_json_file(path));
    Box box = default_box(t);
    if (levels >= 0) box.levels = levels;
    if (window >= 0) box.window = window;
    if (height >= 0) box.height = height;
    if (box.levels > t.levels() || box.window > t.window())
        throw WindowExceeded("rho export-box: box is larger than the table");
    write_poset(o, materialize(t, box).poset, "box");
    return kOk;
}

int cmd_club_build(const Options& o, int stages, const std::string& schedule, std::optional<int> parity,
                   bool no_widen) {
    ClubBuildOptions opts;
    opts.target_parity = parity;
    opts.widen_base = !no_widen;
    ClubState st = build_club(stages, parse_ints(schedule), o.seed, opts);
    write_poset(o, st.order(), "club");
    std::cerr << "widths";
    for (int w : st.widths()) std::cerr << ' ' << w;
    std::cerr << '\n';
    for (int a = 1; a < st.levels(); ++a) {
        std::cerr << "stage " << a << ':';
        for (Elem e : st.sequence(a)) std::cerr << ' ' << st.point(e).id();
        std::cerr << '\n';
    }
    return kOk;
}

int cmd_diamond_build(const Options& o, int stages, int width) {
    DiamondState st = build_diamond(stages, width);
    if (o.format == "tree-dot") {
        Sink sink(o.out);
        sink.stream() << export_tree_dot(st);
        return kOk;
    }
    write_poset(o, st.order(), "diamond");
    return kOk;
}

int cmd_diamond_check(const Options& o, int stages, int width) {
    DiamondState st = build_diamond(stages, width);
    std::vector<Report> rs{check_properties(st), lower_cover_profile(st)};
    Report gammas("gamma-ladders");
    for (int a = 0; a < st.levels(); ++a)
        for (int k = 0; k < st.width(); ++k) {
            Report g = gamma_ladder_check(st, {a, k});
            g.set_title(TreeNode{a, k}.id());
            gammas.absorb(g);
        }
    rs.push_back(gammas);
    print_reports(o, rs);
    return verdict(o, all_passed(rs));
}

int cmd_diamond_branch(const Options& o, int stages, int width, const std::string& leaf) {
    DiamondState st = build_diamond(stages, width);
    const TreeNode x = parse_tree_node(leaf);
    if (x.level < 0 || x.level >= st.levels() || x.index < 0 || x.index >= st.width())
        throw PreconditionError("diamond branch: no node " + leaf);
    const Bits c = branch_union(st, x);
    Report r = branch_check(st, c);
    Sink sink(o.out);
    sink.stream() << subset_to_json(st.order(), c).dump(2) << '\n';
    std::cerr << r.to_text();
    return verdict(o, r.passed());
}

int cmd_cohen_validate(const Options& o, const std::string& path) {
    IdealFamily fam = family_from_json(read_json_file(path));
    Report r = validate_family(fam);
    print_report(o, r);
    return verdict(o, r.passed());
}

int cmd_cohen_cp(const Options& o, const std::string& fam_path, const std::string& cond_path) {
    IdealFamily fam = family_from_json(read_json_file(fam_path));
    Condition p = condition_from_json(fam, read_json_file(cond_path));
    Bits c = c_of(fam, p);
    auto ids = ids_of(fam.base(), c);
    std::sort(ids.begin(), ids.end());
    Sink sink(o.out);
    sink.stream() << Json{{"c", ids}}.dump(2) << '\n';
    return kOk;
}

int cmd_cohen_density(const Options& o, const std::string& fam_path, const std::string& cond_path,
                      const std::string& x) {
    IdealFamily fam = family_from_json(read_json_file(fam_path));
    Condition p = cond_path.empty() ? Condition{} : condition_from_json(fam, read_json_file(cond_path));
    auto [q, y] = density_extend(fam, p, fam.base().index(x));
    Sink sink(o.out);
    sink.stream() << Json{{"condition", condition_to_json(fam, q)}, {"y", fam.base().id(y)}}.dump(2) << '\n';
    return kOk;
}

int cmd_cohen_filter(const Options& o, const std::string& fam_path, const std::string& conds_path) {
    IdealFamily fam = family_from_json(read_json_file(fam_path));
    Report r = filter_union_checks(fam, conditions_from_json(fam, read_json_file(conds_path)));
    print_report(o, r);
    return verdict(o, r.passed());
}

int cmd_selftest(std::uint64_t seed) {
    const auto results = acceptance::run_all(std::cout, seed);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    return ok ? kOk : kVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite ladders: lattice checks, extensions and staged ladder constructions"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> run;

    auto common = [&](CLI::App* sub, bool with_seed) {
        sub->add_flag("--strict", o.strict, "exit 1 when a verdict fails");
        sub->add_option("--format", o.format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text", "tree-dot"}));
        sub->add_option("-o,--out", o.out, "write the artifact to this file");
        if (with_seed) sub->add_option("--seed", o.seed, "seed for every random choice");
    };

    std::string path, path2, subset, schedule = "4", f_text, leaf, x;
    int ladder = 0, n = 2, levels = 3, window = 3, max_value = 5, height = -1, stages = 3, width = 6;
    int box_levels = -1, box_window = -1, box_height = -1;
    bool want_breadth = false, want_lattice = false, no_widen = false;
    std::optional<int> parity;

    auto* check = app.add_subcommand("check", "check lattice, ladder and breadth properties of a poset");
    check->add_option("file", path, "poset JSON")->required();
    check->add_option("--ladder", ladder, "check the n-ladder property");
    check->add_flag("--breadth", want_breadth, "compute the breadth");
    check->add_flag("--lattice", want_lattice, "check the lattice property");
    common(check, false);
    check->callback([&] { run = [&] { return cmd_check(o, path, ladder, want_breadth, want_lattice); }; });

    auto* extend = app.add_subcommand("extend", "add a copy of a cofinal subset on top of a ladder");
    extend->add_option("file", path, "poset JSON")->required();
    extend->add_option("--subset", subset, "comma-separated ids of the cofinal subset")->required();
    extend->add_option("--n", n, "ladder parameter");
    common(extend, false);
    extend->callback([&] { run = [&] { return cmd_extend(o, path, subset, n); }; });

    auto* exp = app.add_subcommand("export", "canonical poset JSON or DOT");
    exp->add_option("file", path, "poset JSON")->required();
    common(exp, false);
    exp->callback([&] { run = [&] { return cmd_export(o, path); }; });

    auto* rho = app.add_subcommand("rho", "tables of the level-indexed lattice");
    rho->require_subcommand(1);
    auto* rcheck = rho->add_subcommand("check", "check the table axioms");
    rcheck->add_option("file", path, "rho JSON")->required();
    common(rcheck, false);
    rcheck->callback([&] { run = [&] { return cmd_rho_check(o, path); }; });
    auto* rbuild = rho->add_subcommand("build", "build a table from a seeded function family");
    rbuild->add_option("--levels", levels)->required();
    rbuild->add_option("--window", window)->required();
    rbuild->add_option("--max-value", max_value, "bound on the random function values");
    common(rbuild, true);
    rbuild->callback([&] { run = [&] { return cmd_rho_build(o, levels, window, max_value); }; });
    auto* rwit = rho->add_subcommand("witness", "check the non-maximality witness for f");
    rwit->add_option("file", path, "rho JSON")->required();
    rwit->add_option("--f", f_text, "comma-separated non-decreasing values over the window")->required();
    rwit->add_option("--height", height, "box height (default from the table and f)");
    common(rwit, false);
    rwit->callback([&] { run = [&] { return cmd_rho_witness(o, path, f_text, height); }; });
    auto* rbox = rho->add_subcommand("export-box", "materialize a box as a poset");
    rbox->add_option("file", path, "rho JSON")->required();
    rbox->add_option("--A", box_levels, "levels");
    rbox->add_option("--N", box_window, "window");
    rbox->add_option("--M", box_height, "height");
    common(rbox, false);
    rbox->callback([&] { run = [&] { return cmd_rho_export_box(o, path, box_levels, box_window, box_height); }; });

    auto* club = app.add_subcommand("club", "breadth-2 staged ladder");
    club->require_subcommand(1);
    auto* cbuild = club->add_subcommand("build", "build the stages; the sequence log goes to stderr");
    cbuild->add_option("--stages", stages)->required();
    cbuild->add_option("--width-schedule", schedule, "comma-separated rung counts; the last repeats");
    cbuild->add_option("--target-parity", parity, "use only chain points with this i")->check(CLI::Range(0, 1));
    cbuild->add_flag("--no-widen", no_widen, "keep the base width as given");
    common(cbuild, true);
    cbuild->callback([&] { run = [&] { return cmd_club_build(o, stages, schedule, parity, no_widen); }; });

    auto* diamond = app.add_subcommand("diamond", "tree-labelled staged ladder");
    diamond->require_subcommand(1);
    auto* dbuild = diamond->add_subcommand("build", "build the lattice (or the tree with --format tree-dot)");
    auto* dcheck = diamond->add_subcommand("check", "check the stage properties and every label");
    auto* dbranch = diamond->add_subcommand("branch", "union of the labels along a branch");
    for (auto* sub : {dbuild, dcheck, dbranch}) {
        sub->add_option("--stages", stages)->required();
        sub->add_option("--width", width);
        common(sub, true);
    }
    dbranch->add_option("--leaf", leaf, "tree node id t<level>.<index>")->required();
    dbuild->callback([&] { run = [&] { return cmd_diamond_build(o, stages, width); }; });
    dcheck->callback([&] { run = [&] { return cmd_diamond_check(o, stages, width); }; });
    dbranch->callback([&] { run = [&] { return cmd_diamond_branch(o, stages, width, leaf); }; });

    auto* cohen = app.add_subcommand("cohen", "ideal families over the index tree and their conditions");
    cohen->require_subcommand(1);
    auto* cval = cohen->add_subcommand("validate", "check a family");
    cval->add_option("family", path)->required();
    common(cval, false);
    cval->callback([&] { run = [&] { return cmd_cohen_validate(o, path); }; });
    auto* ccp = cohen->add_subcommand("cp", "the set C of a condition");
    ccp->add_option("family", path)->required();
    ccp->add_option("condition", path2)->required();
    common(ccp, false);
    ccp->callback([&] { run = [&] { return cmd_cohen_cp(o, path, path2); }; });
    auto* cden = cohen->add_subcommand("density", "extend a condition to put an element above x into C");
    cden->add_option("family", path)->required();
    cden->add_option("condition", path2, "condition JSON (empty when omitted)");
    cden->add_option("--x", x, "element id")->required();
    common(cden, false);
    cden->callback([&] { run = [&] { return cmd_cohen_density(o, path, path2, x); }; });
    auto* cfil = cohen->add_subcommand("filter", "checks on the union of compatible conditions");
    cfil->add_option("family", path)->required();
    cfil->add_option("conditions", path2)->required();
    common(cfil, false);
    cfil->callback([&] { run = [&] { return cmd_cohen_filter(o, path, path2); }; });

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria; exit 1 if any fails");
    std::uint64_t self_seed = 20240601;
    self->add_option("--seed", self_seed, "seed of the acceptance corpora");
    self->callback([&] { run = [&] { return cmd_selftest(self_seed); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const UnknownElement& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        if (!e.report().passed()) std::cerr << e.report().to_text();
        return kPrecondition;
    } catch (const PropertyViolation& e) {
        std::cerr << "internal: " << e.what() << '\n' << e.report().to_text();
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << '\n';
        return kInternal;
    }
}

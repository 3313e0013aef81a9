/* Command-line front end: computes augmentations, bilinearised homology
 * tables, composition maps and the associated consistency checks for
 * semi-free DGAs given in the text format described in the README.
 *
 * Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
 * parse errors. Output is byte-stable for fixed inputs and flags,
 * independently of --jobs. */

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "augcat/ainfty.hpp"
#include "augcat/duality.hpp"
#include "augcat/format.hpp"
#include "augcat/functor.hpp"
#include "augcat/ncopy.hpp"
#include "augcat/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace augcat;

namespace {

struct Options {
    bool as_json = false;
    unsigned jobs = 1;
};

json dims_to_json(const GradedDims& dims)
{
    json out = json::array();
    for (auto it = dims.rbegin(); it != dims.rend(); ++it)
        out.push_back(json::array({it->first, it->second}));
    return out;
}

std::string dims_to_text(const GradedDims& dims)
{
    if (dims.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
        if (!first)
            out << ' ';
        first = false;
        out << it->first << ':' << it->second;
    }
    return out.str();
}

std::string cochain_to_text(const Dga& dga, const CochainVec& v)
{
    if (v.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : v.coeffs()) {
        if (!first)
            out << " + ";
        first = false;
        if (c != 1)
            out << c << ' ';
        out << dga.generator(g).name;
    }
    return out.str();
}

json cochain_to_json(const Dga& dga, const CochainVec& v)
{
    json out = json::array();
    for (const auto& [g, c] : v.coeffs())
        out.push_back(json::array({dga.generator(g).name, c}));
    return out;
}

std::string word_to_text(const Dga& dga, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += dga.generator(w[i]).name;
    }
    return s;
}

void emit(const Options& opt, const json& doc, const std::string& text)
{
    if (opt.as_json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text;
}

std::vector<std::uint32_t> parse_csv_u32(const std::string& csv, const std::string& what)
{
    std::vector<std::uint32_t> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError(what, "expected a comma-separated list of integers");
        out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (out.empty())
        throw CLI::ValidationError(what, "expected at least one value");
    return out;
}

std::vector<std::string> parse_csv_names(const std::string& csv)
{
    std::vector<std::string> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

DgaPtr load_dga(const std::string& path)
{
    return std::make_shared<Dga>(parse_dga_file(path));
}

const Augmentation& pick(const std::vector<Augmentation>& augs, std::size_t i,
                         const char* flag)
{
    if (i >= augs.size())
        throw AlgebraError(std::string(flag) + " index " + std::to_string(i) +
                           " out of range; the enumeration has " +
                           std::to_string(augs.size()) + " augmentations");
    return augs[i];
}

int cmd_validate(const Options& opt, const std::string& file)
{
    DgaPtr dga = load_dga(file);
    auto report = dga->validate();
    json doc{{"command", "validate"}, {"valid", report.empty()}};
    doc["violations"] = json::array();
    std::ostringstream text;
    for (const auto& v : report) {
        doc["violations"].push_back(
            {{"kind", v.kind == DgaViolation::Kind::NonHomogeneousTerm
                          ? "non-homogeneous-term"
                          : "differential-square"},
             {"generator", v.generator},
             {"message", v.message}});
        text << "violation: " << v.message << '\n';
    }
    if (report.empty())
        text << "ok\n";
    emit(opt, doc, text.str());
    return report.empty() ? 0 : 1;
}

int cmd_augs(const Options& opt, const std::string& file)
{
    DgaPtr dga = load_dga(file);
    auto augs = enumerate_augmentations(dga);
    std::vector<std::string> names;
    for (GenIndex g = 0; g < dga->size(); ++g)
        if (dga->grading(g) == 0)
            names.push_back(dga->generator(g).name);

    json rows = json::array();
    std::ostringstream text;
    text << "idx";
    for (const auto& n : names)
        text << ' ' << n;
    text << '\n';
    for (std::size_t i = 0; i < augs.size(); ++i) {
        json row = json::object();
        auto tuple = augs[i].degree_zero_tuple();
        text << i;
        for (std::size_t k = 0; k < names.size(); ++k) {
            row[names[k]] = tuple[k];
            text << ' ' << tuple[k];
        }
        text << '\n';
        rows.push_back(std::move(row));
    }
    json doc{{"command", "augs"}, {"generators", names}, {"augmentations", rows}};
    emit(opt, doc, text.str());
    return 0;
}

int cmd_homology(const Options& opt, const std::string& file, std::size_t from,
                 std::size_t to)
{
    DgaPtr dga = load_dga(file);
    auto augs = enumerate_augmentations(dga);
    GradedDims dims =
        BilinearComplex::differential(pick(augs, from, "--from"), pick(augs, to, "--to"))
            .homology();
    json doc{{"command", "homology"},
             {"from", from},
             {"to", to},
             {"dims", dims_to_json(dims)}};
    emit(opt, doc, dims_to_text(dims) + "\n");
    return 0;
}

int cmd_table(const Options& opt, const std::string& file)
{
    DgaPtr dga = load_dga(file);
    auto table = lch_table(dga, opt.jobs);
    const std::size_t n = table.size();

    json cells = json::array();
    std::vector<std::vector<std::string>> text_cells(n, std::vector<std::string>(n));
    std::size_t width = 1;
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(dims_to_json(table[i][j]));
            text_cells[i][j] = dims_to_text(table[i][j]);
            width = std::max(width, text_cells[i][j].size());
        }
        cells.push_back(std::move(row));
    }
    std::ostringstream text;
    text << "   ";
    for (std::size_t j = 0; j < n; ++j) {
        text << ' ' << j;
        for (std::size_t pad = std::to_string(j).size(); pad < width; ++pad)
            text << ' ';
    }
    text << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        text << i << " |";
        for (std::size_t j = 0; j < n; ++j) {
            text << ' ' << text_cells[i][j];
            for (std::size_t pad = text_cells[i][j].size(); pad < width; ++pad)
                text << ' ';
        }
        text << '\n';
    }
    json doc{{"command", "table"}, {"size", n}, {"cells", cells}};
    emit(opt, doc, text.str());
    return 0;
}

int cmd_classify(const Options& opt, const std::string& file)
{
    DgaPtr dga = load_dga(file);
    auto table = lch_table(dga, opt.jobs);
    auto cells = classify_augmentations(table);
    json classes = json::array();
    std::ostringstream text;
    bool any_shared = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        classes.push_back(cells[c]);
        text << "class " << c << ':';
        for (std::size_t m : cells[c])
            text << ' ' << m;
        text << '\n';
        if (cells[c].size() > 1)
            any_shared = true;
    }
    text << cells.size() << " distinguished class" << (cells.size() == 1 ? "" : "es")
         << " among " << table.size() << " augmentations\n";
    if (any_shared)
        text << "augmentations sharing a class are not distinguished by this invariant; "
                "they need not be equivalent\n";
    json doc{{"command", "classify"},
             {"augmentations", table.size()},
             {"classes", classes}};
    emit(opt, doc, text.str());
    return 0;
}

int cmd_mu(const Options& opt, const std::string& file, const std::string& augs_csv,
           const std::string& chords_csv)
{
    DgaPtr dga = load_dga(file);
    auto augs = enumerate_augmentations(dga);
    std::vector<std::uint32_t> indices = parse_csv_u32(augs_csv, "--augs");
    std::vector<std::string> chord_names = parse_csv_names(chords_csv);
    if (indices.size() != chord_names.size() + 1)
        throw AlgebraError("need one more augmentation than chords");
    std::vector<Augmentation> tuple;
    for (std::uint32_t i : indices)
        tuple.push_back(pick(augs, i, "--augs"));
    std::vector<GenIndex> chords;
    for (const std::string& name : chord_names) {
        auto g = dga->find(name);
        if (!g)
            throw AlgebraError("unknown chord '" + name + "'");
        chords.push_back(*g);
    }
    CochainVec value = mu(tuple, std::span<const GenIndex>(chords));
    json doc{{"command", "mu"},
             {"augs", indices},
             {"chords", chord_names},
             {"value", cochain_to_json(*dga, value)}};
    emit(opt, doc, cochain_to_text(*dga, value) + "\n");
    return 0;
}

int cmd_ainfty(const Options& opt, const std::string& file, std::size_t max_d)
{
    DgaPtr dga = load_dga(file);
    auto violations = check_a_infinity(dga, max_d, opt.jobs);
    json doc{{"command", "ainfty"}, {"max_d", max_d}};
    std::ostringstream text;
    if (violations.empty()) {
        doc["status"] = "PASS";
        text << "PASS\n";
    } else {
        const auto& v = violations.front();
        doc["status"] = "FAIL";
        doc["witness"] = {{"arity", v.arity},
                          {"segment_augmentations", v.context},
                          {"args", word_to_text(*dga, v.args)},
                          {"residual", cochain_to_json(*dga, v.residual)}};
        text << "FAIL at arity " << v.arity << ", args " << word_to_text(*dga, v.args)
             << ", residual " << cochain_to_text(*dga, v.residual) << '\n';
    }
    emit(opt, doc, text.str());
    return violations.empty() ? 0 : 1;
}

int cmd_oracle(const Options& opt, const std::string& file, std::uint32_t max_n,
               std::size_t max_d)
{
    DgaPtr dga = load_dga(file);
    auto mismatches = oracle_check(dga, max_n, max_d, opt.jobs);
    json doc{{"command", "oracle"}, {"max_n", max_n}, {"max_d", max_d}};
    std::ostringstream text;
    if (mismatches.empty()) {
        doc["status"] = "PASS";
        text << "PASS\n";
    } else {
        const auto& m = mismatches.front();
        doc["status"] = "FAIL";
        doc["witness"] = {{"generator", dga->generator(m.generator).name},
                          {"arity", m.arity},
                          {"copies", m.copies},
                          {"segment_augmentations", m.context},
                          {"via_conjugation", print_poly(*dga, m.via_conjugation)},
                          {"via_formula", print_poly(*dga, m.via_formula)}};
        text << "FAIL on " << dga->generator(m.generator).name << " (arity " << m.arity
             << ", " << m.copies << " copies): conjugation gives "
             << print_poly(*dga, m.via_conjugation) << ", formula gives "
             << print_poly(*dga, m.via_formula) << '\n';
    }
    emit(opt, doc, text.str());
    return mismatches.empty() ? 0 : 1;
}

int cmd_duality(const Options& opt, const std::string& file, const std::string& betti_csv,
                int dim)
{
    DgaPtr dga = load_dga(file);
    GradedDims betti;
    std::vector<std::uint32_t> raw = parse_csv_u32(betti_csv, "--betti");
    for (std::size_t k = 0; k < raw.size(); ++k)
        if (raw[k])
            betti[static_cast<int>(k)] = static_cast<int>(raw[k]);
    auto rows = duality_check(dga, betti, dim, opt.jobs);
    bool all_pass = true;
    json pairs = json::array();
    std::ostringstream text;
    for (const auto& row : rows) {
        all_pass = all_pass && row.pass;
        pairs.push_back({{"from", row.from},
                         {"to", row.to},
                         {"pass", row.pass},
                         {"sequence", row.sequence},
                         {"ranks", row.ranks}});
        text << "pair (" << row.from << ',' << row.to << "): "
             << (row.pass ? "PASS" : "FAIL") << '\n';
    }
    text << (all_pass ? "PASS" : "FAIL") << '\n';
    json doc{{"command", "duality"},
             {"dim", dim},
             {"pairs", pairs},
             {"status", all_pass ? "PASS" : "FAIL"}};
    emit(opt, doc, text.str());
    return all_pass ? 0 : 1;
}

int cmd_functor(const Options& opt, const std::string& source_file,
                const std::string& target_file, const std::string& map_file,
                std::size_t max_d)
{
    DgaPtr source = load_dga(source_file);
    DgaPtr target = load_dga(target_file);
    DgaMorphism f = parse_morphism_file(map_file, source, target);
    auto morphism_report = f.validate();
    json doc{{"command", "functor"}, {"check", max_d}};
    std::ostringstream text;
    doc["morphism_violations"] = json::array();
    for (const auto& v : morphism_report) {
        doc["morphism_violations"].push_back(
            {{"generator", v.generator}, {"message", v.message}});
        text << "morphism violation: " << v.message << '\n';
    }
    if (!morphism_report.empty()) {
        doc["status"] = "FAIL";
        text << "FAIL\n";
        emit(opt, doc, text.str());
        return 1;
    }
    AinftyFunctor F = AinftyFunctor::induced(f);
    auto violations = check_functor_equation(F, max_d, opt.jobs);
    doc["equation_violations"] = json::array();
    for (const auto& v : violations) {
        doc["equation_violations"].push_back(
            {{"arity", v.arity},
             {"segment_augmentations", v.context},
             {"args", word_to_text(*target, v.args)}});
        text << "functor equation fails at arity " << v.arity << ", args "
             << word_to_text(*target, v.args) << '\n';
    }
    bool pass = violations.empty();
    doc["status"] = pass ? "PASS" : "FAIL";
    text << (pass ? "PASS" : "FAIL") << '\n';
    emit(opt, doc, text.str());
    return pass ? 0 : 1;
}

int cmd_stabilize(const Options& opt, const std::string& file, int degree,
                  const std::string& names_csv)
{
    DgaPtr dga = load_dga(file);
    std::string name_b, name_c;
    if (!names_csv.empty()) {
        auto names = parse_csv_names(names_csv);
        if (names.size() != 2)
            throw AlgebraError("--names expects exactly two comma-separated names");
        name_b = names[0];
        name_c = names[1];
    } else {
        for (int k = 1;; ++k) {
            name_b = "sb" + std::to_string(k);
            name_c = "sc" + std::to_string(k);
            if (!dga->find(name_b) && !dga->find(name_c))
                break;
        }
    }
    Dga stab = dga->stabilized(degree, name_b, name_c);
    json gens = json::array();
    for (const Generator& g : stab.generators())
        gens.push_back({{"name", g.name}, {"grading", g.grading}});
    json diffs = json::array();
    for (GenIndex g = 0; g < stab.size(); ++g)
        if (!stab.differential(g).is_zero())
            diffs.push_back({{"generator", stab.generator(g).name},
                             {"value", print_poly(stab, stab.differential(g))}});
    json doc{{"command", "stabilize"},
             {"field", stab.characteristic()},
             {"generators", gens},
             {"differentials", diffs}};
    emit(opt, doc, print_dga(stab));
    return 0;
}

int cmd_selftest(const Options& opt, const std::string& data_dir)
{
    SelftestSummary summary = run_selftest(data_dir, opt.jobs);
    json records = json::array();
    std::ostringstream text;
    for (const auto& r : summary.records) {
        records.push_back(
            {{"name", r.name}, {"basis", r.basis}, {"pass", r.pass}, {"detail", r.detail}});
        text << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass)
            text << " (" << r.detail << ')';
        text << '\n';
    }
    std::size_t failures = summary.failures();
    text << summary.records.size() - failures << '/' << summary.records.size()
         << " records passed\n";
    json doc{{"command", "selftest"},
             {"records", records},
             {"failures", failures}};
    emit(opt, doc, text.str());
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"augcat: augmentations, bilinearised homology and composition maps of "
                 "semi-free differential graded algebras over prime fields"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit structured JSON instead of text");
    app.add_option("--jobs", opt.jobs, "worker threads; output is identical for any value")
        ->default_val(1);

    std::string file, map_file, source_file, target_file;
    std::string augs_csv, chords_csv, betti_csv, names_csv, data_dir = "data";
    std::size_t from = 0, to = 0, max_d = 3;
    std::uint32_t max_n = 3;
    int degree = 0, dim = 1;

    CLI::App* validate = app.add_subcommand("validate", "check gradings and d^2 = 0");
    validate->add_option("file", file)->required();

    CLI::App* augs = app.add_subcommand(
        "augs", "list the augmentations in canonical enumeration order");
    augs->add_option("file", file)->required();

    CLI::App* homology = app.add_subcommand(
        "homology", "graded dimensions of one bilinearised homology");
    homology->add_option("file", file)->required();
    homology->add_option("--from", from, "row augmentation index (weights left segments)")
        ->required();
    homology->add_option("--to", to, "column augmentation index (weights right segments)")
        ->required();

    CLI::App* table = app.add_subcommand(
        "table", "bilinearised homology for every ordered augmentation pair");
    table->add_option("file", file)->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "partition augmentations by their homology rows and columns");
    classify->add_option("file", file)->required();

    CLI::App* mu_cmd = app.add_subcommand(
        "mu", "composition map value; --augs lists eps_0,...,eps_d and --chords lists "
              "b_d,...,b_1, so the first chord is the leftmost letter and eps_d weights "
              "the segment to its left");
    mu_cmd->add_option("file", file)->required();
    mu_cmd->add_option("--augs", augs_csv, "augmentation indices eps_0,...,eps_d")
        ->required();
    mu_cmd->add_option("--chords", chords_csv, "chord names b_d,...,b_1")->required();

    CLI::App* ainfty_cmd = app.add_subcommand(
        "ainfty", "verify the composition relations up to an arity bound");
    ainfty_cmd->add_option("file", file)->required();
    ainfty_cmd->add_option("--max-d", max_d)->default_val(3);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "compare the n-copy conjugation route with the direct formulas");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--max-n", max_n)->default_val(3);
    oracle_cmd->add_option("--max-d", max_d)->default_val(2);

    CLI::App* duality_cmd = app.add_subcommand(
        "duality", "dimension-level feasibility of the duality exact sequence");
    duality_cmd->add_option("file", file)->required();
    duality_cmd->add_option("--betti", betti_csv, "Betti numbers from degree 0 upward")
        ->required();
    duality_cmd->add_option("--dim", dim, "dimension of the Legendrian")->default_val(1);

    CLI::App* functor_cmd = app.add_subcommand(
        "functor", "validate a DGA morphism and the functor it induces");
    functor_cmd->add_option("source", source_file, "source DGA file")->required();
    functor_cmd->add_option("target", target_file, "target DGA file")->required();
    functor_cmd->add_option("--map", map_file, "img lines, one per source generator")
        ->required();
    functor_cmd->add_option("--check", max_d, "verify the functor equation up to this arity")
        ->default_val(3);

    CLI::App* stabilize_cmd = app.add_subcommand(
        "stabilize", "add a cancelling pair db = c and print the result");
    stabilize_cmd->add_option("file", file)->required();
    stabilize_cmd->add_option("--degree", degree, "grading of the new generator b")
        ->required();
    stabilize_cmd->add_option("--names", names_csv, "names for b,c (default: fresh)");

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the bundled golden and property records");
    selftest_cmd->add_option("--data", data_dir, "directory with the bundled corpus")
        ->default_val("data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (*validate)
            return cmd_validate(opt, file);
        if (*augs)
            return cmd_augs(opt, file);
        if (*homology)
            return cmd_homology(opt, file, from, to);
        if (*table)
            return cmd_table(opt, file);
        if (*classify)
            return cmd_classify(opt, file);
        if (*mu_cmd)
            return cmd_mu(opt, file, augs_csv, chords_csv);
        if (*ainfty_cmd)
            return cmd_ainfty(opt, file, max_d);
        if (*oracle_cmd)
            return cmd_oracle(opt, file, max_n, max_d);
        if (*duality_cmd)
            return cmd_duality(opt, file, betti_csv, dim);
        if (*functor_cmd)
            return cmd_functor(opt, source_file, target_file, map_file, max_d);
        if (*stabilize_cmd)
            return cmd_stabilize(opt, file, degree, names_csv);
        if (*selftest_cmd)
            return cmd_selftest(opt, data_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

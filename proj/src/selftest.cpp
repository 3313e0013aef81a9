#include "augcat/selftest.hpp"

#include <random>
#include <sstream>

#include "augcat/ainfty.hpp"
#include "augcat/duality.hpp"
#include "augcat/format.hpp"
#include "augcat/functor.hpp"
#include "augcat/ncopy.hpp"

namespace augcat {

namespace {

using Check = std::string (*)(const std::string& data_dir, unsigned jobs);

std::string dims_to_string(const GradedDims& dims)
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

Poly random_poly(const Dga& dga, std::mt19937& rng)
{
    std::uniform_int_distribution<int> len_dist(0, 3);
    std::uniform_int_distribution<std::uint32_t> gen_dist(
        0, static_cast<std::uint32_t>(dga.size() - 1));
    std::uniform_int_distribution<std::uint32_t> coeff_dist(1, dga.characteristic() - 1);
    Poly out(dga.characteristic());
    int terms = len_dist(rng) + 1;
    for (int t = 0; t < terms; ++t) {
        Word w;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i)
            w.push_back(gen_dist(rng));
        out.add_term(w, Scalar(coeff_dist(rng), dga.characteristic()));
    }
    return out;
}

std::vector<std::string> valid_corpus()
{
    return {"trefoil.dga", "chekanov_eliashberg.dga", "unknot.dga", "signed_p3_a.dga",
            "signed_p3_b.dga", "trefoil_stab.dga"};
}

DgaPtr load(const std::string& data_dir, const std::string& file)
{
    return std::make_shared<Dga>(parse_dga_file(data_dir + "/" + file));
}

std::string check_trefoil_augmentations(const std::string& data_dir, unsigned)
{
    DgaPtr dga = load(data_dir, "trefoil.dga");
    auto augs = enumerate_augmentations(dga);
    std::vector<std::vector<std::uint32_t>> expected = {
        {0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
    if (augs.size() != expected.size())
        return "expected 5 augmentations, found " + std::to_string(augs.size());
    for (std::size_t i = 0; i < augs.size(); ++i)
        if (augs[i].degree_zero_tuple() != expected[i])
            return "row " + std::to_string(i) + " differs from the published table";
    return {};
}

std::string check_ce_augmentations(const std::string& data_dir, unsigned)
{
    DgaPtr dga = load(data_dir, "chekanov_eliashberg.dga");
    auto augs = enumerate_augmentations(dga);
    std::vector<std::vector<std::uint32_t>> expected = {
        {0, 0, 1, 1, 1}, {0, 1, 1, 1, 1}, {1, 0, 1, 1, 1}};
    if (augs.size() != expected.size())
        return "expected 3 augmentations, found " + std::to_string(augs.size());
    for (std::size_t i = 0; i < augs.size(); ++i)
        if (augs[i].degree_zero_tuple() != expected[i])
            return "row " + std::to_string(i) + " differs from the published table";
    return {};
}

std::string check_grid(const std::string& data_dir, const std::string& file,
                       std::size_t size, unsigned jobs)
{
    DgaPtr dga = load(data_dir, file);
    auto table = lch_table(dga, jobs);
    if (table.size() != size)
        return "table size " + std::to_string(table.size());
    GradedDims diagonal{{0, 2}, {1, 1}};
    GradedDims off{{0, 1}};
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j) {
            const GradedDims& want = i == j ? diagonal : off;
            if (table[i][j] != want)
                return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                       dims_to_string(table[i][j]) + ", expected " + dims_to_string(want);
        }
    auto cells = classify_augmentations(table);
    if (cells.size() != size)
        return "classification found " + std::to_string(cells.size()) + " classes";
    return {};
}

std::string check_trefoil_grid(const std::string& data_dir, unsigned jobs)
{
    return check_grid(data_dir, "trefoil.dga", 5, jobs);
}

std::string check_ce_grid(const std::string& data_dir, unsigned jobs)
{
    return check_grid(data_dir, "chekanov_eliashberg.dga", 3, jobs);
}

std::string check_unknot(const std::string& data_dir, unsigned)
{
    DgaPtr dga = load(data_dir, "unknot.dga");
    if (!dga->validate().empty())
        return "unknot failed validation";
    if (!enumerate_augmentations(dga).empty())
        return "unknot should admit no augmentations";
    return {};
}

std::string check_broken(const std::string& data_dir, unsigned)
{
    DgaPtr dga = load(data_dir, "broken.dga");
    auto report = dga->validate();
    for (const auto& v : report)
        if (v.kind == DgaViolation::Kind::DifferentialSquare)
            return {};
    return "expected a differential-square violation";
}

std::string check_validations(const std::string& data_dir, unsigned)
{
    for (const std::string& file : valid_corpus()) {
        DgaPtr dga = load(data_dir, file);
        auto report = dga->validate();
        if (!report.empty())
            return file + ": " + report.front().message;
    }
    return {};
}

std::string check_oracle(const std::string& data_dir, unsigned jobs)
{
    auto mismatches = oracle_check(load(data_dir, "trefoil.dga"), 3, 2, jobs);
    if (!mismatches.empty())
        return "trefoil: conjugation and formula disagree";
    mismatches = oracle_check(load(data_dir, "chekanov_eliashberg.dga"), 2, 1, jobs);
    if (!mismatches.empty())
        return "chekanov_eliashberg: conjugation and formula disagree";
    return {};
}

std::string check_relations(const std::string& data_dir, unsigned jobs)
{
    for (const char* file : {"trefoil.dga", "chekanov_eliashberg.dga"}) {
        auto violations = check_a_infinity(load(data_dir, file), 3, jobs);
        if (!violations.empty())
            return std::string(file) + ": relation failed at arity " +
                   std::to_string(violations.front().arity);
    }
    return {};
}

std::string check_relations_signed(const std::string& data_dir, unsigned jobs)
{
    for (const char* file : {"signed_p3_a.dga", "signed_p3_b.dga"}) {
        auto violations = check_dual_leibniz(load(data_dir, file), 3, jobs);
        if (!violations.empty())
            return std::string(file) + ": dualised square-zero identity failed at arity " +
                   std::to_string(violations.front().arity);
    }
    return {};
}

std::string check_duality(const std::string& data_dir, unsigned jobs)
{
    GradedDims circle{{0, 1}, {1, 1}};
    for (const char* file : {"trefoil.dga", "chekanov_eliashberg.dga"}) {
        auto rows = duality_check(load(data_dir, file), circle, 1, jobs);
        for (const auto& row : rows)
            if (!row.pass)
                return std::string(file) + ": pair (" + std::to_string(row.from) + "," +
                       std::to_string(row.to) + ") infeasible";
    }
    return {};
}

std::string check_signed_corpus(const std::string& data_dir, unsigned)
{
    if (enumerate_augmentations(load(data_dir, "signed_p3_a.dga")).size() != 1)
        return "signed_p3_a should admit exactly the zero augmentation";
    auto augs = enumerate_augmentations(load(data_dir, "signed_p3_b.dga"));
    std::vector<std::vector<std::uint32_t>> expected = {{1, 2}, {2, 0}};
    if (augs.size() != 2)
        return "signed_p3_b should admit 2 augmentations";
    for (std::size_t i = 0; i < 2; ++i)
        if (augs[i].degree_zero_tuple() != expected[i])
            return "signed_p3_b augmentation row " + std::to_string(i) + " unexpected";
    return {};
}

std::string check_stabilization_counting(const std::string& data_dir, unsigned)
{
    struct Case {
        const char* file;
        std::size_t expected;
    } cases[] = {{"trefoil.dga", 10}, {"chekanov_eliashberg.dga", 6}, {"signed_p3_b.dga", 6}};
    for (const auto& c : cases) {
        DgaPtr dga = load(data_dir, c.file);
        DgaPtr stab = std::make_shared<Dga>(dga->stabilized(0, "sb1", "sc1"));
        std::size_t count = enumerate_augmentations(stab).size();
        if (count != c.expected)
            return std::string(c.file) + ": degree-0 stabilization has " +
                   std::to_string(count) + " augmentations, expected " +
                   std::to_string(c.expected);
    }
    return {};
}

std::string check_d_squared_random(const std::string& data_dir, unsigned)
{
    std::mt19937 rng(20240229);
    for (const std::string& file : valid_corpus()) {
        DgaPtr dga = load(data_dir, file);
        for (int trial = 0; trial < 100; ++trial) {
            Poly x = random_poly(*dga, rng);
            if (!dga->apply_differential(dga->apply_differential(x)).is_zero())
                return file + ": d(d(x)) != 0 on a random polynomial";
        }
    }
    return {};
}

std::string check_round_trips(const std::string& data_dir, unsigned)
{
    for (const std::string& file : valid_corpus()) {
        DgaPtr dga = load(data_dir, file);
        Dga reparsed = parse_dga(print_dga(*dga));
        if (!(reparsed == *dga))
            return file + ": parse -> print -> parse is not the identity";
    }
    return {};
}

std::string check_identity_prenatural(const std::string& data_dir, unsigned jobs)
{
    DgaPtr dga = load(data_dir, "trefoil.dga");
    AinftyFunctor id = AinftyFunctor::identity(dga);
    PreNatural T = PreNatural::identity_on(id);
    auto entries = prenatural_differential(T, 3, jobs);
    // mu^1(T)^d must be mu^d for even d and 0 for odd d
    std::vector<Augmentation> augs = id.dom_augs();
    for (const auto& e : entries) {
        if (e.arity % 2 == 1)
            return "odd arity " + std::to_string(e.arity) + " is nonzero";
        std::vector<Augmentation> ctx;
        for (std::size_t s : e.context)
            ctx.push_back(augs[s]);
        MuTable table(*dga, ctx);
        const CochainVec* expected = table.find(e.args);
        if (!expected || *expected != e.value)
            return "even arity " + std::to_string(e.arity) + " differs from mu";
    }
    return {};
}

struct Entry {
    const char* name;
    const char* basis;
    Check fn;
};

const Entry kEntries[] = {
    {"corpus validates", "forced by the definitions", check_validations},
    {"trefoil augmentation table", "published table", check_trefoil_augmentations},
    {"trefoil homology grid", "published values", check_trefoil_grid},
    {"chekanov-eliashberg augmentation table", "published table", check_ce_augmentations},
    {"chekanov-eliashberg homology grid", "published values", check_ce_grid},
    {"unknot has no augmentations", "forced by the definitions", check_unknot},
    {"broken corpus file is rejected", "forced by the definitions", check_broken},
    {"n-copy oracle agrees with the direct formulas", "cross-check", check_oracle},
    {"composition relations hold to arity 3", "cross-check", check_relations},
    {"dualised square-zero identity holds over F_3", "cross-check", check_relations_signed},
    {"duality feasibility passes for both knots", "derived layout", check_duality},
    {"signed corpus augmentation counts", "hand computation", check_signed_corpus},
    {"degree-0 stabilization multiplies augmentation counts", "hand computation",
     check_stabilization_counting},
    {"d squared vanishes on random polynomials", "forced by the definitions",
     check_d_squared_random},
    {"parse/print round trips", "forced by the definitions", check_round_trips},
    {"identity pre-natural transformation", "published identity", check_identity_prenatural},
};

} // namespace

SelftestSummary run_selftest(const std::string& data_dir, unsigned jobs)
{
    SelftestSummary summary;
    for (const Entry& entry : kEntries) {
        SelftestRecord record;
        record.name = entry.name;
        record.basis = entry.basis;
        try {
            record.detail = entry.fn(data_dir, jobs);
            record.pass = record.detail.empty();
        } catch (const std::exception& e) {
            record.pass = false;
            record.detail = e.what();
        }
        summary.records.push_back(std::move(record));
    }
    return summary;
}

} // namespace augcat

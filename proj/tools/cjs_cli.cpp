#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cjs/clans.hpp"
#include "cjs/decider.hpp"
#include "cjs/examples.hpp"
#include "cjs/formula.hpp"
#include "cjs/io.hpp"
#include "cjs/representation.hpp"
#include "cjs/structure.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;  // negative mathematical verdict
constexpr int kUsage = 2;     // usage or parse error

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Shape errors (bad JSON, wrong fields) exit 2; a well-formed document that
// fails mathematical validation exits 1 from the caller.
cjs::StructureDescription load_description(const std::string& path) {
    const std::string text = read_input(path);
    cjs::Json j;
    try {
        j = cjs::Json::parse(text);
    } catch (const cjs::Json::parse_error& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
    try {
        return cjs::description_from_json(j);
    } catch (const cjs::StructureError& e) {
        throw UsageError(std::string("malformed structure file: ") + e.what());
    }
}

cjs::FiniteJoinStructure load_structure(const std::string& path) {
    return cjs::FiniteJoinStructure::validate(load_description(path));
}

std::string set_text(const cjs::FiniteJoinStructure& s, cjs::Mask m) {
    std::string out = "{ ";
    bool first = true;
    for (int e : cjs::mask_elements(m)) {
        if (!first) out += ", ";
        out += s.name(e);
        first = false;
    }
    return out + " }";
}

std::string witness_text(const cjs::FiniteJoinStructure& s, const std::vector<int>& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += s.name(w[i]);
    }
    return out + ")";
}

int run_check(const std::string& path, bool json) {
    const cjs::FiniteJoinStructure s = load_structure(path);
    const cjs::AxiomReport axioms = cjs::check_contact_axioms(s);
    const cjs::AdResult ad = cjs::check_ad(s);
    const cjs::Classification c = cjs::classify(s);
    if (json) {
        cjs::Json j;
        j["structure"] = cjs::structure_to_json(s);
        cjs::Json ax = cjs::Json::object();
        const std::pair<const char*, const cjs::AxiomVerdict*> rows[] = {
            {"no_contact_with_zero", &axioms.no_contact_with_zero},
            {"symmetry", &axioms.symmetry},
            {"join_distribution", &axioms.join_distribution},
            {"monotonicity", &axioms.monotonicity},
            {"reflexivity", &axioms.reflexivity},
        };
        for (const auto& [name, verdict] : rows) {
            cjs::Json entry;
            entry["pass"] = verdict->pass;
            if (!verdict->pass) {
                cjs::Json w = cjs::Json::array();
                for (int e : verdict->witness) w.push_back(s.name(e));
                entry["witness"] = std::move(w);
            }
            ax[name] = std::move(entry);
        }
        j["contact_axioms"] = std::move(ax);
        cjs::Json adj;
        adj["pass"] = ad.pass;
        if (!ad.pass) adj["witness"] = {s.name(ad.x), s.name(ad.a), s.name(ad.b)};
        j["ad"] = std::move(adj);
        j["cjs"] = c.is_cjs;
        j["dcjs"] = c.is_dcjs;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "structure: " << s.size() << " elements, zero \"" << s.name(s.zero())
                  << "\", one \"" << s.name(s.one()) << "\"\n";
        auto line = [&](const char* name, const cjs::AxiomVerdict& v) {
            std::cout << name << ": " << (v.pass ? "pass" : "FAIL") ;
            if (!v.pass) std::cout << "  witness " << witness_text(s, v.witness);
            std::cout << "\n";
        };
        line("axiom (9)  no contact with zero", axioms.no_contact_with_zero);
        line("axiom (10) symmetry", axioms.symmetry);
        line("axiom (11) join distribution", axioms.join_distribution);
        line("axiom (12) monotonicity", axioms.monotonicity);
        line("axiom (13) reflexivity", axioms.reflexivity);
        std::cout << "(ad): " << (ad.pass ? "pass" : "FAIL");
        if (!ad.pass)
            std::cout << "  witness (" << s.name(ad.x) << ", " << s.name(ad.a) << ", "
                      << s.name(ad.b) << ")";
        std::cout << "\n";
        std::cout << "CJS: " << (c.is_cjs ? "yes" : "no") << "\n";
        std::cout << "DCJS: " << (c.is_dcjs ? "yes" : "no") << "\n";
    }
    return c.is_cjs ? kOk : kNegative;
}

int run_subsets(const std::string& path, bool json, bool points) {
    const cjs::FiniteJoinStructure s = load_structure(path);
    const std::vector<cjs::Mask> masks =
        points ? cjs::enumerate_abstract_points(s) : cjs::enumerate_clans(s);
    const char* label = points ? "abstract points" : "clans";
    if (json) {
        cjs::Json j;
        j[points ? "points" : "clans"] = cjs::masks_to_json(s, masks);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << masks.size() << " " << label << "\n";
        for (cjs::Mask m : masks) std::cout << set_text(s, m) << "\n";
    }
    return kOk;
}

int run_represent(const std::string& path, const std::string& mode, const std::string& strategy,
                  bool json) {
    const cjs::FiniteJoinStructure s = load_structure(path);
    cjs::Embedding e;
    try {
        if (mode == "set") {
            e = cjs::set_representation(s);
        } else {
            const auto strat = strategy == "prime-ideal" ? cjs::RelationalStrategy::PrimeIdeal
                                                         : cjs::RelationalStrategy::ClanBased;
            e = cjs::relational_representation(s, strat);
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "precondition failed: " << err.what() << "\n";
        return kNegative;
    }
    const cjs::EmbeddingReport report = cjs::verify_embedding(s, e);
    if (json) {
        cjs::Json j = cjs::embedding_to_json(s, e);
        cjs::Json clauses = cjs::Json::array();
        for (const auto& clause : report.clauses) {
            cjs::Json cj;
            cj["name"] = clause.name;
            cj["pass"] = clause.pass;
            if (!clause.pass) cj["witness"] = clause.witness;
            clauses.push_back(std::move(cj));
        }
        j["verification"] = std::move(clauses);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << e.points.size() << " points\n";
        for (size_t i = 0; i < e.points.size(); ++i)
            std::cout << "  W" << i << " = " << set_text(s, e.points[i]) << "\n";
        for (const auto& clause : report.clauses) {
            std::cout << clause.name << ": " << (clause.pass ? "pass" : "FAIL");
            if (!clause.pass) std::cout << "  witness " << clause.witness;
            std::cout << "\n";
        }
    }
    return report.all_pass() ? kOk : kNegative;
}

int run_decide(const std::string& text, const std::string& mode, bool dcjs, bool json) {
    cjs::FormulaPtr f;
    try {
        f = cjs::parse_formula(text);
    } catch (const cjs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    }
    cjs::DecisionResult r;
    if (dcjs)
        r = cjs::decide_restricted_dcjs(f);
    else
        r = cjs::decide(f, mode == "reference" ? cjs::DecideMode::Reference
                                               : cjs::DecideMode::Generated);
    const char* verdict = r.verdict == cjs::Verdict::Valid     ? "VALID"
                          : r.verdict == cjs::Verdict::Invalid ? "INVALID"
                                                               : "INCONCLUSIVE";
    if (json) {
        cjs::Json j;
        j["formula"] = cjs::render(f);
        j["verdict"] = verdict;
        if (r.counterexample) {
            j["counterexample"] = cjs::structure_to_json(*r.counterexample);
            j["counterexample"]["valuation"] = cjs::valuation_to_json(*r.counterexample,
                                                                      r.valuation);
        }
        if (!r.note.empty()) j["note"] = r.note;
        j["stats"] = {{"structures_examined", r.stats.structures_examined},
                      {"work_units", r.stats.work_units}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << verdict << "\n";
        if (!r.note.empty()) std::cout << r.note << "\n";
        if (r.counterexample) {
            cjs::Json j = cjs::structure_to_json(*r.counterexample);
            j["valuation"] = cjs::valuation_to_json(*r.counterexample, r.valuation);
            std::cout << j.dump(2) << "\n";
        }
    }
    return r.verdict == cjs::Verdict::Valid ? kOk : kNegative;
}

int run_enumerate(int size, const std::string& kind, bool count_only, bool json) {
    cjs::EnumerationCursor cursor;
    cursor.max_size = size;
    cursor.kind = kind == "dcjs" ? cjs::StructureKind::Dcjs
                  : kind == "raw" ? cjs::StructureKind::Raw
                                  : cjs::StructureKind::Cjs;
    const std::vector<cjs::FiniteJoinStructure> all = cjs::enumerate_structures(cursor);
    if (count_only) {
        std::cout << all.size() << "\n";
        return kOk;
    }
    if (json) {
        cjs::Json j = cjs::Json::array();
        for (const auto& s : all) j.push_back(cjs::structure_to_json(s));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << all.size() << " structures\n";
        for (const auto& s : all) std::cout << cjs::structure_to_json(s).dump() << "\n";
    }
    return kOk;
}

int run_example(const std::string& name, int size, const std::string& topology_file) {
    cjs::Json out;
    if (name == "pr2nn") {
        out = cjs::structure_to_json(cjs::fixture_pr2nn());
    } else if (name == "powerset") {
        std::vector<std::string> points;
        for (int i = 1; i <= size; ++i) points.push_back(std::to_string(i));
        out = cjs::structure_to_json(cjs::powerset_cjs(points));
    } else if (name == "relational") {
        // total relation on {1, 2}: every nonzero pair in contact
        std::vector<std::string> points;
        for (int i = 1; i <= size; ++i) points.push_back(std::to_string(i));
        std::vector<std::pair<int, int>> relation;
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b) relation.push_back({a, b});
        std::vector<cjs::Mask> family;
        for (cjs::Mask m = 0; m < (cjs::Mask{1} << size); ++m) family.push_back(m);
        out = cjs::structure_to_json(cjs::relational_structure(points, relation, family));
    } else {  // topology
        cjs::FiniteTopology t;
        if (!topology_file.empty()) {
            const std::string text = read_input(topology_file);
            cjs::Json j;
            try {
                j = cjs::Json::parse(text);
            } catch (const cjs::Json::parse_error& e) {
                throw UsageError(std::string("input is not valid JSON: ") + e.what());
            }
            t = cjs::topology_from_json(j);
        } else {
            t = cjs::FiniteTopology::validate({"1", "2"}, {0b00, 0b01, 0b11});
        }
        out = cjs::structure_to_json(cjs::finite_topology_rc(t).structure);
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite contact join-semilattices: validation, representation, decision"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();

    std::string path;
    auto* check = app.add_subcommand("check", "validate and classify a structure file");
    check->add_option("file", path, "structure file, or - for stdin")->required();

    auto* clans = app.add_subcommand("clans", "list the clans of a structure");
    clans->add_option("file", path)->required();

    auto* points = app.add_subcommand("points", "list the abstract points of a structure");
    points->add_option("file", path)->required();

    std::string mode = "set";
    std::string strategy = "clan";
    auto* represent = app.add_subcommand("represent", "embed into a set or relational target");
    represent->add_option("file", path)->required();
    represent->add_option("--mode", mode)->check(CLI::IsMember({"set", "relational"}));
    represent->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"clan", "prime-ideal"}));

    std::string formula;
    std::string decide_mode = "generated";
    bool dcjs = false;
    auto* decide = app.add_subcommand("decide", "decide validity of a formula over all CJS");
    decide->add_option("formula", formula)->required();
    decide->add_option("--mode", decide_mode)->check(CLI::IsMember({"reference", "generated"}));
    decide->add_flag("--dcjs", dcjs, "search DCJS structures only (cross-validation)");

    int size = 3;
    std::string kind = "cjs";
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate structures up to isomorphism");
    enumerate->add_option("--size", size, "carrier size bound")->required();
    enumerate->add_option("--kind", kind)->check(CLI::IsMember({"raw", "cjs", "dcjs"}));
    enumerate->add_flag("--count-only", count_only);

    std::string example_name;
    int example_size = 2;
    std::string topology_file;
    auto* example = app.add_subcommand("example", "emit a standard example structure");
    example->add_option("name", example_name)
        ->required()
        ->check(CLI::IsMember({"powerset", "relational", "topology", "pr2nn"}));
    example->add_option("--size", example_size, "point count for powerset/relational");
    example->add_option("--topology", topology_file, "topology JSON file for the topology example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    const bool json = format == "json";
    try {
        if (*check) return run_check(path, json);
        if (*clans) return run_subsets(path, json, false);
        if (*points) return run_subsets(path, json, true);
        if (*represent) return run_represent(path, mode, strategy, json);
        if (*decide) return run_decide(formula, decide_mode, dcjs, json);
        if (*enumerate) return run_enumerate(size, kind, count_only, json);
        if (*example) return run_example(example_name, example_size, topology_file);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const cjs::StructureError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

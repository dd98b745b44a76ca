// Command-line harness: builds the named modules, runs the sphericity and
// monoid machinery, and regression-checks the report tables against golden
// files.  Exit codes: 2 parse error, 3 verification failure, 4 not spherical.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sla/tables.hpp"

using namespace sla;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

AlgebraPtr make_algebra(const AlgebraSpec& s) {
    if (s.exceptional)
        throw CliError(2, "exceptional algebras expose root data only; use `table exceptional`");
    return build_algebra(s.kind, s.m, s.n);
}

ordered_json sphericity_json(const Rep& r, const Borel& b, const Config& cfg) {
    auto rep = is_spherical(r, b, cfg);
    ordered_json j;
    j["borel"] = b.label;
    j["verdict"] = rep.spherical ? "spherical" : "not_spherical";
    j["method"] = rep.sampled ? "sampled" : "symbolic";
    j["generic_rank"] = rep.generic_rank;
    j["dim"] = rep.dim;
    if (rep.spherical) {
        std::vector<std::string> w;
        for (auto& x : rep.witness) w.push_back(x.str());
        j["witness"] = w;
        auto st = stabilizer(r, rep.witness);
        j["stabilizer_superdim"] = st.sdim.str();
        j["stabilizer_bracket_closed"] = st.bracket_closed;
        j["stabilizer_hint"] = st.hint;
    }
    return j;
}

ordered_json monoid_json(const MonoidReport& rep) {
    ordered_json j;
    j["degree_cap"] = rep.degree_cap;
    ordered_json rows = ordered_json::array();
    for (auto& r : rep.rows) {
        ordered_json row;
        row["weight"] = r.wt.str();
        row["multiplicity"] = r.multiplicity;
        row["non_nilpotent"] = r.non_nilpotent;
        rows.push_back(row);
    }
    j["rows"] = rows;
    j["multiplicity_free"] = rep.multiplicity_free;
    j["closed"] = rep.closed;
    if (!rep.declared.empty()) {
        j["matches_declared"] = rep.matches_declared;
        j["diffs"] = rep.diffs;
    }
    return j;
}

ordered_json table_json(const TableReport& rep) {
    ordered_json j;
    j["table_id"] = rep.table_id;
    ordered_json rows = ordered_json::array();
    for (auto& r : rep.rows) {
        ordered_json row;
        row["key"] = r.key;
        row["note"] = r.note;
        row["value"] = r.value;
        row["flags"] = r.flags;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

void emit(const ordered_json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // markdown rendering
    if (j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() &&
        j["rows"][0].contains("key")) {
        std::cout << "| key | value | flags |\n|---|---|---|\n";
        for (auto& r : j["rows"]) {
            std::string flags;
            for (auto& f : r["flags"]) flags += std::string(f) + " ";
            std::cout << "| " << std::string(r["key"]) << " | " << std::string(r["value"]) << " | "
                      << flags << "|\n";
        }
        return;
    }
    for (auto& [k, v] : j.items()) std::cout << "- **" << k << "**: " << v.dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic sphericity atlas for classical Lie superalgebras"};
    app.require_subcommand(1);
    std::string config_path, format = "json";
    int jobs = 0;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));
    app.add_option("--jobs", jobs, "worker pool width");

    std::string algebra, module_spec = "std", borel_spec, alpha, golden_path;
    int m = 0, n = 0, max_degree = -1;
    bool scan = false;

    auto add_algebra_opts = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra, "gl|osp|p|q|g12|f13|d21a")->required();
        cmd->add_option("--m", m, "first rank parameter");
        cmd->add_option("--n", n, "second rank parameter");
        cmd->add_option("--alpha", alpha, "D(2,1;a) parameter as p/q");
    };

    auto* check = app.add_subcommand("check", "build a module and test sphericity");
    add_algebra_opts(check);
    check->add_option("--module", module_spec, "module spec (std, pi:..., kac:t=..., ...)");
    check->add_option("--borel", borel_spec, "eps-delta sequence or h=c1,c2,... coweight");
    check->add_flag("--scan", scan, "scan every Borel conjugacy class");

    auto* table = app.add_subcommand("table", "recompute a report table and diff against golden");
    std::string table_id;
    table->add_option("id", table_id, "table identifier")->required();
    table->add_option("--golden", golden_path, "golden file path");
    table->add_option("--max-degree", max_degree, "degree cap override");
    bool write_golden = false;
    table->add_flag("--write-golden", write_golden, "write the computed table to the golden path");

    auto* monoid = app.add_subcommand("monoid", "weight monoid of a spherical module");
    add_algebra_opts(monoid);
    monoid->add_option("--module", module_spec, "module spec");
    monoid->add_option("--borel", borel_spec, "eps-delta sequence or coweight");
    monoid->add_option("--max-degree", max_degree, "degree cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        Config cfg = config_path.empty() ? Config() : Config::from_file(config_path);
        if (jobs > 0) cfg.jobs = jobs;
        if (max_degree >= 0) cfg.degree_cap = max_degree;

        if (table->parsed()) {
            TableReport rep = compute_table(table_id, cfg);
            ordered_json j = table_json(rep);
            if (write_golden) {
                if (golden_path.empty()) throw CliError(2, "--write-golden needs --golden");
                std::ofstream out(golden_path);
                out << j.dump(2) << "\n";
                std::cout << "wrote " << golden_path << "\n";
                return 0;
            }
            if (golden_path.empty()) {
                emit(j, format);
                return 0;
            }
            std::ifstream in(golden_path);
            if (!in) throw CliError(2, "golden file not found: " + golden_path);
            ordered_json want = ordered_json::parse(in);
            std::map<std::string, std::string> expect;
            for (auto& r : want["rows"]) expect[r["key"]] = std::string(r["value"]);
            int diffs = 0;
            for (auto& r : rep.rows) {
                auto it = expect.find(r.key);
                if (it == expect.end()) {
                    std::cout << "NEW   " << r.key << ": " << r.value << "\n";
                    ++diffs;
                } else if (it->second != r.value) {
                    std::cout << "DIFF  " << r.key << "\n  want: " << it->second
                              << "\n  got:  " << r.value << "\n";
                    ++diffs;
                }
            }
            for (auto& [k, v] : expect) {
                bool found = false;
                for (auto& r : rep.rows) found = found || r.key == k;
                if (!found) {
                    std::cout << "GONE  " << k << "\n";
                    ++diffs;
                }
            }
            if (diffs) {
                std::cout << diffs << " row(s) differ\n";
                return 1;
            }
            std::cout << "PASS " << table_id << " (" << rep.rows.size() << " rows)\n";
            return 0;
        }

        AlgebraSpec spec = parse_algebra(algebra, m, n, alpha);
        AlgebraPtr g = make_algebra(spec);
        Rep r = build_module(g, module_spec, cfg);
        auto ver = verify_representation(r);
        if (!ver.ok) throw CliError(3, "representation failed verification: " + ver.detail);

        auto borel_from_cli = [&](const std::string& s) {
            if (s.rfind("h=", 0) == 0) {
                std::vector<Rat> h;
                std::stringstream ss(s.substr(2));
                std::string num;
                while (std::getline(ss, num, ',')) h.push_back(rat_from_string(num));
                return borel_from_coweight(g, h);
            }
            return borel_from_sequence(g, s);
        };

        if (check->parsed()) {
            ordered_json j;
            j["algebra"] = g->name();
            j["module"] = r.provenance;
            j["superdim"] = r.sdim().str();
            ordered_json wts = ordered_json::array();
            for (auto& [w, sd] : r.weight_decomposition()) {
                ordered_json e;
                e["weight"] = w.str();
                e["even_mult"] = sd.ev;
                e["odd_mult"] = sd.od;
                wts.push_back(e);
            }
            j["weights"] = wts;
            if (scan) {
                ordered_json reports = ordered_json::array();
                for (auto& b : enumerate_borel_classes(g)) reports.push_back(sphericity_json(r, b, cfg));
                j["scan"] = reports;
            } else if (!borel_spec.empty()) {
                j["report"] = sphericity_json(r, borel_from_cli(borel_spec), cfg);
            }
            emit(j, format);
            return 0;
        }

        if (monoid->parsed()) {
            if (borel_spec.empty()) throw CliError(2, "monoid needs --borel");
            Borel b = borel_from_cli(borel_spec);
            if (!is_spherical(r, b, cfg).spherical) {
                std::cerr << "module is not spherical with respect to " << b.label << "\n";
                return 4;
            }
            auto rep = weight_monoid(r, b, cfg.degree_cap, {}, cfg);
            emit(monoid_json(rep), format);
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

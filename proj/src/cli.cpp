/*
   Copyright 2026 The nutforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nutforge/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nutforge/constructions.hpp"
#include "nutforge/graph_io.hpp"
#include "nutforge/isomorphism.hpp"
#include "nutforge/lemmas.hpp"
#include "nutforge/nut.hpp"
#include "nutforge/parallel.hpp"

namespace nutforge {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

long parse_count(const std::string& text, const char* what) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    if (v < 0) throw UsageError(std::string(what) + " must be non-negative, got " + text);
    if (v > (1L << 30)) throw UsageError(std::string(what) + " is too large: " + text);
    return v;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::string rational_vector_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
    return out + ")";
}

struct Common {
    bool json = false;
    unsigned jobs = 1;
};

int cmd_exists(const std::string& n_text, const std::string& d_text, const Common& c, std::ostream& out) {
    const long n = parse_count(n_text, "n");
    const long d = parse_count(d_text, "d");
    if (n == 0) throw UsageError("n must be positive");
    const FeasibilityVerdict v = feasible_vt(n, d);
    if (c.json)
        out << json{{"n", n}, {"d", d}, {"exists", v.exists}, {"case", to_string(v.case_)}, {"reason", v.reason}}.dump()
            << '\n';
    else
        out << "exists: " << (v.exists ? "true" : "false") << "  case: " << to_string(v.case_)
            << "  reason: " << v.reason << '\n';
    return v.exists ? kExitSuccess : kExitNegative;
}

int cmd_construct(const std::string& n_text, const std::string& d_text, const std::string& format, bool recipe_line,
                  std::uint64_t limit, const Common& c, std::ostream& out, std::ostream& err) {
    const long n = parse_count(n_text, "n");
    const long d = parse_count(d_text, "d");
    SearchOptions options;
    options.circulant_limit = limit;
    options.dihedral_limit = limit;
    options.jobs = c.jobs;
    Witness w;
    try {
        w = construct(static_cast<int>(n), static_cast<int>(d), options);
    } catch (const InfeasiblePair& e) {
        err << "construct: " << e.what() << '\n';
        if (c.json) out << json{{"n", n}, {"d", d}, {"exists", false}, {"reason", e.what()}}.dump() << '\n';
        return kExitNegative;
    } catch (const SearchExhausted& e) {
        err << "construct: " << e.what() << '\n';
        return kExitBudget;
    }
    // The witness was certified by construct(); re-check the emitted graph anyway.
    const NutCertificate cert = nut_check_direct(w.graph);
    if (!cert.is_nut || is_regular(w.graph) != d || w.graph.order() != n)
        throw std::logic_error("construct produced an uncertified graph");

    if (c.json) {
        out << json{{"n", n},
                    {"d", d},
                    {"recipe", w.recipe},
                    {"graph6", to_graph6(w.graph)},
                    {"nullity", cert.nullity},
                    {"is_nut", cert.is_nut}}
                   .dump()
            << '\n';
        return kExitSuccess;
    }
    (recipe_line ? out : err) << "# recipe: " << w.recipe << '\n';
    if (format == "graph6")
        out << to_graph6(w.graph) << '\n';
    else if (format == "adjacency-list")
        out << to_adjacency_list(w.graph);
    else
        out << to_dot(w.graph, "nut_" + std::to_string(n) + "_" + std::to_string(d));
    return kExitSuccess;
}

std::optional<BicirculantSpec> as_bicirculant(const GraphSpec& spec) {
    if (const auto* d = std::get_if<DihedralSpec>(&spec)) return BicirculantSpec::from_dihedral(*d);
    if (const auto* b = std::get_if<BicirculantSpec>(&spec)) return *b;
    return std::nullopt;
}

int cmd_verify(const std::string& input, const std::string& input_format, const std::string& method, int shift,
               const Common& c, std::istream& in, std::ostream& out, std::ostream& err) {
    const std::string text = read_input(input, in);
    std::vector<GraphInput> graphs;
    try {
        graphs = read_graphs(text, parse_input_format(input_format));
    } catch (const ParseError& e) {
        throw UsageError(std::string("cannot parse input: ") + e.what());
    }
    const bool want_direct = method != "spectral";
    const bool want_spectral = method != "direct";
    if (want_spectral)
        for (const auto& g : graphs)
            if (!g.spec) throw UsageError("the spectral method needs a circulant, dihedral or bicirculant spec line");

    bool all_positive = true;
    for (const auto& g : graphs) {
        json record{{"input", g.label}, {"order", g.graph.order()}, {"method", method}, {"shift", shift}};
        std::vector<std::string> lines;
        std::optional<std::size_t> direct_nullity;
        std::optional<std::size_t> spectral_nullity;
        std::optional<bool> verdict;

        if (want_direct) {
            if (shift == 0) {
                const NutCertificate cert = nut_check_direct(g.graph);
                direct_nullity = cert.nullity;
                verdict = cert.is_nut;
                record["nullity"] = cert.nullity;
                record["is_nut"] = cert.is_nut;
                if (cert.kernel_has_zero_entry) record["kernel_has_zero_entry"] = *cert.kernel_has_zero_entry;
                if (cert.kernel_vector) record["kernel_vector"] = rational_vector_string(*cert.kernel_vector);
                if (cert.is_nut)
                    lines.push_back("nut: true, nullity: 1");
                else if (cert.kernel_has_zero_entry.value_or(false))
                    lines.push_back("nut: false (kernel vector has zero entry)");
                else
                    lines.push_back("nut: false, nullity: " + std::to_string(cert.nullity));
            } else {
                direct_nullity = nullity_shifted(g.graph, shift);
                verdict = *direct_nullity == 1;
                record["shifted_nullity"] = *direct_nullity;
                lines.push_back("shifted nullity: " + std::to_string(*direct_nullity));
            }
        }

        if (want_spectral) {
            if (const auto* circ = std::get_if<CirculantSpec>(&*g.spec)) {
                spectral_nullity = circulant_nullity(*circ, shift);
                lines.push_back("spectral nullity: " + std::to_string(*spectral_nullity));
                if (!verdict) verdict = *spectral_nullity == 1;
            } else {
                const BicirculantSpec bic = *as_bicirculant(*g.spec);
                const SpectralReport rep = nut_check_spectral(bic, shift);
                spectral_nullity = rep.total_nullity;
                json divs = json::array();
                for (const auto& v : rep.divisor_verdicts) {
                    json dv{{"b", v.b}, {"det_divisible", v.det_divisible}, {"multiplicity", v.multiplicity}};
                    if (v.trace_nonzero_at_root) dv["trace_nonzero_at_root"] = *v.trace_nonzero_at_root;
                    divs.push_back(dv);
                    if (v.det_divisible)
                        lines.push_back("singular at b = " + std::to_string(v.b) + ", block multiplicity " +
                                        std::to_string(v.multiplicity));
                }
                record["divisor_verdicts"] = divs;
                lines.push_back("spectral nullity: " + std::to_string(rep.total_nullity));
                if (!verdict) {
                    if (shift == 1 || bic.is_dihedral()) {
                        verdict = shift == 1 ? rep.total_nullity == 1 : rep.nullity_one();
                        if (shift == 0)
                            lines.push_back(std::string("nut: ") + (*verdict ? "true" : "false") +
                                            " (vertex-transitive, nullity " + std::to_string(rep.total_nullity) + ")");
                    } else {
                        verdict = false;
                        lines.push_back("nut: undetermined (not vertex-transitive; use --method direct)");
                    }
                }
            }
            record["spectral_nullity"] = *spectral_nullity;
        }

        if (direct_nullity && spectral_nullity) {
            const bool agree = *direct_nullity == *spectral_nullity;
            record["methods_agree"] = agree;
            lines.push_back(agree ? "methods agree" : "methods DISAGREE");
            if (!agree) {
                err << "verify: direct and spectral nullities differ for " << g.label << '\n';
                verdict = false;
            }
        }
        record["verdict"] = verdict.value_or(false);
        all_positive = all_positive && verdict.value_or(false);

        if (c.json) {
            out << record.dump() << '\n';
        } else {
            if (graphs.size() > 1) out << "# " << g.label << '\n';
            for (const auto& l : lines) out << l << '\n';
        }
    }
    return all_positive ? kExitSuccess : kExitNegative;
}

int cmd_lemmas(const std::string& family, std::uint64_t t_max, std::uint64_t beta_max,
               std::optional<std::uint64_t> beta_min, bool full, const Common& c, std::ostream& out) {
    std::vector<FamilyId> families;
    if (family == "all")
        for (auto tag : {FamilyTag::Q, FamilyTag::R, FamilyTag::S, FamilyTag::T}) families.push_back(FamilyId::of(tag));
    else
        try {
            families.push_back(FamilyId::parse(family));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }

    bool ok = true;
    auto emit = [&](const VerificationReport& r) {
        ok = ok && r.success();
        if (c.json)
            out << r.summary_json() << '\n';
        else
            out << r.to_text();
    };
    for (const FamilyId& f : families) {
        emit(verify_family_bounded(f, t_max, std::nullopt, c.jobs));
        const std::uint64_t lo = beta_min.value_or(unique_remainder_threshold(f.tag));
        if (lo == 0 || lo > beta_max) throw UsageError("empty beta range");
        emit(verify_unique_remainder(f, lo, beta_max, c.jobs));
        if (full) emit(replicate_finite_case_analysis(f, c.jobs));
    }
    if (!c.json) out << "# lemmas: " << (ok ? "all suites passed" : "violations found") << '\n';
    return ok ? kExitSuccess : kExitNegative;
}

int cmd_census(const std::string& family, const std::string& n_text, const std::string& d_text, bool no_dedup,
               std::uint64_t limit, std::uint64_t canonical_budget, const Common& c, std::ostream& out,
               std::ostream& err) {
    const long n = parse_count(n_text, "n");
    const long d = parse_count(d_text, "d");
    CensusFamily fam;
    try {
        fam = parse_census_family(family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!no_dedup && n > 20)
        throw UsageError("isomorphism deduplication is limited to n <= 20; rerun with --no-dedup");
    CensusOptions options;
    options.dedup = !no_dedup;
    options.candidate_limit = limit;
    options.canonical_budget = canonical_budget;
    options.jobs = c.jobs;
    CensusResult result;
    try {
        result = census(fam, static_cast<int>(n), static_cast<int>(d), options);
    } catch (const SearchBudgetExceeded& e) {
        err << "census: " << e.what() << '\n';
        return kExitBudget;
    }
    for (const auto& w : result.witnesses) {
        if (c.json)
            out << json{{"graph6", to_graph6(w.graph)}, {"recipe", w.recipe}, {"nullity", w.certificate.nullity},
                        {"is_nut", w.certificate.is_nut}}
                       .dump()
                << '\n';
        else
            out << to_graph6(w.graph) << '\n';
    }
    const std::string unit = no_dedup ? "specs" : "classes";
    if (c.json)
        out << json{{"family", family}, {"n", n}, {"d", d}, {unit, result.witnesses.size()},
                    {"candidates", result.candidates}, {"nut_specs", result.nut_specs}}
                   .dump()
            << '\n';
    else
        out << "# " << unit << ": " << result.witnesses.size() << " (candidates " << result.candidates
            << ", nut specs " << result.nut_specs << ")\n";
    return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex-transitive nut graph toolkit", "nutforge"};
    app.require_subcommand(1);

    std::string output_format = "text";
    int jobs = 0;
    std::string output_path;
    app.add_option("--output-format", output_format, "text or json (one JSON object per line)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "worker threads (default: NUTFORGE_JOBS or hardware concurrency)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-o,--output", output_path, "write results to this file instead of standard output");

    std::string n_text, d_text;

    auto* exists = app.add_subcommand("exists", "Is there a d-regular vertex-transitive nut graph of order n?");
    exists->add_option("n", n_text, "order")->required();
    exists->add_option("d", d_text, "degree")->required();

    std::string format = "graph6";
    bool recipe_line = false;
    std::uint64_t search_limit = SearchOptions{}.circulant_limit;
    auto* construct_cmd = app.add_subcommand("construct", "Emit a certified witness graph");
    construct_cmd->add_option("n", n_text, "order")->required();
    construct_cmd->add_option("d", d_text, "degree")->required();
    construct_cmd->add_option("--format", format, "graph6, adjacency-list or dot")
        ->check(CLI::IsMember({"graph6", "adjacency-list", "dot"}));
    construct_cmd->add_flag("--recipe", recipe_line, "print the recipe comment on standard output");
    construct_cmd->add_option("--limit", search_limit, "candidate budget for each search fallback");

    std::string input;
    std::string input_format = "auto";
    std::string method = "direct";
    int shift = 0;
    auto* verify = app.add_subcommand("verify", "Certify graphs read from a file");
    verify->add_option("--input", input, "input file, '-' for standard input")->required();
    verify->add_option("--input-format", input_format, "auto, graph6, adjlist or spec")
        ->check(CLI::IsMember({"auto", "graph6", "adjlist", "adjacency-list", "spec"}));
    verify->add_option("--method", method, "direct, spectral or both")
        ->check(CLI::IsMember({"direct", "spectral", "both"}));
    verify->add_option("--shift", shift, "0 for A, 1 for A + I")->check(CLI::IsMember({0, 1}));

    std::string family = "all";
    std::uint64_t t_max = 20;
    std::uint64_t beta_max = 300;
    std::optional<std::uint64_t> beta_min;
    bool full = false;
    auto* lemmas = app.add_subcommand("lemmas", "Re-verify the cyclotomic non-divisibility suites");
    lemmas->add_option("--family", family, "Q, R, S, T or all")->check(CLI::IsMember({"Q", "R", "S", "T", "all"}));
    lemmas->add_option("--t-max", t_max, "largest t for the bounded check");
    lemmas->add_option("--beta-max", beta_max, "largest beta for the unique-remainder check");
    lemmas->add_option("--beta-min", beta_min, "smallest beta (default: the family threshold)");
    lemmas->add_flag("--full-case-analysis", full, "also run the finite feasible-index case analysis");

    std::string census_family;
    bool no_dedup = false;
    std::uint64_t census_limit = CensusOptions{}.candidate_limit;
    std::uint64_t canonical_budget = CensusOptions{}.canonical_budget;
    auto* census_cmd = app.add_subcommand("census", "List nut graphs of a family, one per isomorphism class");
    census_cmd->add_option("--family", census_family, "circulant or dihedral")
        ->required()
        ->check(CLI::IsMember({"circulant", "dihedral"}));
    census_cmd->add_option("n", n_text, "order")->required();
    census_cmd->add_option("d", d_text, "degree")->required();
    census_cmd->add_flag("--no-dedup", no_dedup, "list every nut connection set");
    census_cmd->add_option("--budget", census_limit, "maximum number of candidate connection sets");
    census_cmd->add_option("--canonical-budget", canonical_budget, "search nodes per canonical form");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Common common;
    common.json = output_format == "json";
    common.jobs = resolve_jobs(jobs > 0 ? std::optional<unsigned>(jobs) : std::nullopt);

    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "nutforge: cannot write '" << output_path << "'\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = output_path.empty() ? out : file;

    try {
        if (*exists) return cmd_exists(n_text, d_text, common, sink);
        if (*construct_cmd)
            return cmd_construct(n_text, d_text, format, recipe_line, search_limit, common, sink, err);
        if (*verify) return cmd_verify(input, input_format, method, shift, common, in, sink, err);
        if (*lemmas) return cmd_lemmas(family, t_max, beta_max, beta_min, full, common, sink);
        if (*census_cmd)
            return cmd_census(census_family, n_text, d_text, no_dedup, census_limit, canonical_budget, common, sink,
                              err);
    } catch (const UsageError& e) {
        err << "nutforge: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "nutforge: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nutforge

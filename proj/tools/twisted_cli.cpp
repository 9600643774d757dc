// Command-line front end for the twisted-sector library: enumeration,
// age queries, verification sweeps, count tables, stable Betti tables.
//
// Exit codes: 0 success / all checks verified, 1 verification failure,
// 2 invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "twisted/io.hpp"

using namespace twisted;

namespace {

struct OutputSink {
    std::optional<std::string> path;

    void write(const std::string& text) const {
        if (path) {
            std::ofstream f(*path);
            if (!f) throw std::runtime_error("cannot open output file: " + *path);
            f << text;
        } else {
            std::cout << text;
        }
    }
};

MarkConvention parse_convention(const std::string& s) {
    if (s == "corrected") return MarkConvention::Corrected;
    if (s == "printed") return MarkConvention::Printed;
    throw CLI::ValidationError("--mark-convention must be corrected or printed");
}

std::string records_text(const std::vector<SectorRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += detail::datum_str(r.datum);
        out += "  age=" + r.age.str();
        out += " codim=" + std::to_string(r.codim);
        out += " dim=" + std::to_string(r.dim);
        out += " mult=" + r.multiplicity.get_str();
        if (r.hyperelliptic) out += " hyperelliptic";
        out += "\n";
    }
    return out;
}

std::string records_csv(const std::vector<SectorRecord>& records) {
    std::string out = csv_header() + "\n";
    for (const auto& r : records) out += to_csv_row(r) + "\n";
    return out;
}

int run_enumerate(long g, long n, const std::string& format, const OutputSink& sink,
                  MarkConvention conv, std::optional<long> max_order) {
    auto res = enumerate_sectors(g, n, conv, max_order);
    if (format == "json")
        sink.write(to_json(res).dump(2) + "\n");
    else if (format == "csv")
        sink.write(records_csv(res.records));
    else
        sink.write(records_text(res.records) + "total: " + std::to_string(res.total()) + "\n");
    return 0;
}

int run_count(long g_max, const std::string& filter, const std::string& format,
              const OutputSink& sink) {
    CountFilter f = CountFilter::None;
    if (filter == "gprime0") f = CountFilter::GPrimeZero;
    else if (filter == "gprime0-sumd3") f = CountFilter::GPrimeZeroSumD3;
    else if (!filter.empty()) throw CLI::ValidationError("unknown --filter: " + filter);
    auto counts = count_table(g_max, f);
    if (format == "json") {
        sink.write(json(counts).dump() + "\n");
    } else {
        std::string out;
        for (size_t i = 0; i < counts.size(); ++i)
            out += (i ? "," : "") + std::to_string(counts[i]);
        sink.write(out + "\n");
    }
    return 0;
}

int run_age(const std::string& datum_json, const std::string& format,
            const OutputSink& sink, MarkConvention conv) {
    SectorDatum y = datum_from_json(json::parse(datum_json));
    auto rep = validate(y);
    if (!rep.ok()) {
        std::cerr << "invalid datum: " << rep.message() << "\n";
        return 2;
    }
    auto b = age_breakdown(y, conv);
    SectorDatum t = twin(y);
    if (format == "json") {
        json j = to_json(y);
        j["age"] = b.total.str();
        j["breakdown"] = to_json(b);
        j["codim"] = codimension(y);
        j["dim"] = sector_dimension(y);
        j["multiplicity"] = multiplicity(y).get_str();
        j["hyperelliptic"] = is_hyperelliptic(y);
        j["twin"] = to_json(t);
        sink.write(j.dump(2) + "\n");
    } else {
        std::string out;
        out += "age: " + b.total.str() + "\n";
        out += "  base: " + b.base.str() + "\n";
        out += "  mark: " + b.mark.str() + "\n";
        for (const auto& [sigma, v] : b.per_sigma)
            out += "  sigma=" + std::to_string(sigma) + ": " + v.str() + "\n";
        out += "codim: " + std::to_string(codimension(y)) + "\n";
        out += "twin: " + detail::datum_str(t) + "\n";
        sink.write(out);
    }
    return 0;
}

int run_verify(long g, long n, const std::string& suite, const std::string& format,
               const OutputSink& sink, MarkConvention conv) {
    std::vector<VerificationReport> reports;
    if (suite == "all" || suite == "twin") reports.push_back(verify_twin_identity(g, n, conv));
    if (suite == "all" || suite == "minage") reports.push_back(verify_min_age(g, n, conv));
    if (suite == "all" || suite == "codim") reports.push_back(verify_codim_bound(g, n));
    if (suite == "all" || suite == "lemma") {
        VerificationReport lemma;
        lemma.scope = "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
        auto res = enumerate_sectors(g, n, conv);
        CheckResult c{"lemma_bounds", true, ""};
        for (const auto& r : res.records) {
            auto rep = lemma_bounds(r.datum, conv);
            if (!rep.passed()) {
                c.pass = false;
                c.witness = rep.scope;
                break;
            }
        }
        if (res.records.empty()) c.witness = "empty enumeration";
        lemma.checks.push_back(c);
        reports.push_back(lemma);
    }
    if (reports.empty()) throw CLI::ValidationError("unknown --suite: " + suite);

    bool all_passed = true;
    std::string conv_name = conv == MarkConvention::Corrected ? "corrected" : "printed";
    if (format == "json") {
        json j = json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        sink.write(json{{"mark_convention", conv_name}, {"reports", j}}.dump(2) + "\n");
        for (const auto& r : reports) all_passed = all_passed && r.passed();
    } else {
        std::string out = "mark convention: " + conv_name + "\n";
        for (const auto& r : reports) {
            for (const auto& c : r.checks) {
                out += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name + " " + r.scope;
                if (!c.witness.empty()) out += "  [" + c.witness + "]";
                out += "\n";
            }
            all_passed = all_passed && r.passed();
        }
        sink.write(out);
    }
    return all_passed ? 0 : 1;
}

int run_betti(long n, long k_max, std::optional<long> genus, const std::string& format,
              const OutputSink& sink) {
    auto t = betti_table(n, k_max);
    if (!genus) {
        if (format == "json")
            sink.write(to_json(t).dump(2) + "\n");
        else {
            std::string out;
            for (long k = 0; k <= k_max; ++k)
                out += (k ? "," : "") + t.dims[size_t(k)].get_str();
            sink.write(out + "\n");
        }
        return 0;
    }
    json dims = json::array();
    std::string text;
    for (long k = 0; k <= k_max; ++k) {
        auto r = orbifold_stable_betti(*genus, n, k);
        if (r.value) {
            dims.push_back(r.value->get_str());
            text += "k=" + std::to_string(k) + ": " + r.value->get_str() + "\n";
        } else {
            dims.push_back(json{{"value", nullptr}, {"reason", r.reason()}});
            text += "k=" + std::to_string(k) + ": " + r.reason() + "\n";
        }
    }
    if (format == "json")
        sink.write(json{{"g", *genus}, {"n", n}, {"dims", dims}}.dump(2) + "\n");
    else
        sink.write(text);
    return 0;
}

int run_rank(long g, long n, long top, const std::string& format, const OutputSink& sink,
             MarkConvention conv) {
    auto records = rank_by_age(g, n, top, conv);
    if (format == "json") {
        json j = json::array();
        for (const auto& r : records) {
            json e = to_json(r.datum);
            e["age"] = r.age.str();
            e["codim"] = r.codim;
            e["hyperelliptic"] = r.hyperelliptic;
            j.push_back(e);
        }
        sink.write(j.dump(2) + "\n");
    } else if (format == "csv") {
        sink.write(records_csv(records));
    } else {
        sink.write(records_text(records));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted sectors of the moduli spaces of smooth pointed curves:\n"
                 "enumeration, exact ages, theorem verification, stable Betti numbers"};
    app.require_subcommand(1);

    long g = 0, n = 0, g_max = 1, k_max = 0, top = -1;
    std::optional<long> genus_opt, max_order;
    std::string format = "text", filter, suite = "all", datum_json, convention = "corrected";
    std::optional<std::string> out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", out_path);
        cmd->add_option("--mark-convention", convention)
            ->check(CLI::IsMember({"corrected", "printed"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list all admissible data for (g,n)");
    enumerate->add_option("--genus", g)->required();
    enumerate->add_option("--marks", n)->required();
    enumerate->add_option("--max-order", max_order);
    add_common(enumerate);

    auto* count = app.add_subcommand("count", "counts of admissible data per genus");
    count->add_option("--genus-max", g_max)->required()->check(CLI::PositiveNumber);
    count->add_option("--filter", filter);
    add_common(count);

    auto* age_cmd = app.add_subcommand("age", "age and breakdown of one datum");
    age_cmd->add_option("--datum", datum_json)->required();
    add_common(age_cmd);

    auto* verify = app.add_subcommand("verify", "run the theorem checks at (g,n)");
    verify->add_option("--genus", g)->required();
    verify->add_option("--marks", n)->required();
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "twin", "minage", "codim", "lemma"}));
    add_common(verify);

    auto* betti = app.add_subcommand("stable-betti", "stable cohomology dimensions");
    betti->add_option("--marks", n)->required()->check(CLI::NonNegativeNumber);
    betti->add_option("--max-degree", k_max)->required()->check(CLI::NonNegativeNumber);
    betti->add_option("--genus", genus_opt);
    add_common(betti);

    auto* rank = app.add_subcommand("rank", "lowest-age records at (g,n)");
    rank->add_option("--genus", g)->required();
    rank->add_option("--marks", n)->required();
    rank->add_option("--top", top)->required();
    add_common(rank);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        OutputSink sink{out_path};
        MarkConvention conv = parse_convention(convention);
        if (enumerate->parsed()) return run_enumerate(g, n, format, sink, conv, max_order);
        if (count->parsed()) return run_count(g_max, filter, format, sink);
        if (age_cmd->parsed()) return run_age(datum_json, format, sink, conv);
        if (verify->parsed()) return run_verify(g, n, suite, format, sink, conv);
        if (betti->parsed()) return run_betti(n, k_max, genus_opt, format, sink);
        if (rank->parsed()) return run_rank(g, n, top, format, sink, conv);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

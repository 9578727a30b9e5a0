#include <CLI11.hpp>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "calab/corpus.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int emit_reports(const std::vector<calab::CheckReport>& reports, const std::string& hash,
                 const std::string& json_path, bool text) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << calab::reports_to_json(reports, hash, timestamp());
    }
    if (text || json_path.empty()) std::cout << calab::reports_to_text(reports);
    return calab::summarize(reports).unexpected == 0 ? 0 : 1;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calab: a graded commutative-algebra engine with a claim-checking harness"};
    app.require_subcommand(1);

    // run
    std::string run_file, run_json;
    bool run_text = false;
    auto* run = app.add_subcommand("run", "evaluate a session file");
    run->add_option("file", run_file, "session file (.cl)")->required();
    run->add_option("--json", run_json, "write the JSON report here");
    run->add_flag("--text", run_text, "also print the text report");

    // corpus
    std::string corpus_only, corpus_json;
    bool corpus_text = false;
    auto* corpus = app.add_subcommand("corpus", "run the built-in verification corpus");
    corpus->add_option("--only", corpus_only, "comma-separated entry ids");
    corpus->add_option("--json", corpus_json, "write the JSON report here");
    corpus->add_flag("--text", corpus_text, "also print the text report");

    // compute
    std::string comp_invariant, comp_in, comp_target;
    auto* compute = app.add_subcommand("compute", "compute one invariant from a session file");
    compute->add_option("invariant", comp_invariant, "depth | depth_rees | height | pd | dim | length")
        ->required();
    compute->add_option("--in", comp_in, "session file with the definitions")->required();
    compute->add_option("--target", comp_target,
                        "\"(gens)|M\" for depths, \"p\" for height, \"M\" otherwise")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            std::string text = read_file(run_file);
            auto reports = calab::run_session_text(text);
            return emit_reports(reports, calab::fnv1a_hex(text), run_json, run_text);
        }
        if (*corpus) {
            auto reports = calab::run_corpus(split_commas(corpus_only));
            return emit_reports(reports, calab::corpus_session_hash(), corpus_json, corpus_text);
        }
        if (*compute) {
            std::string text = read_file(comp_in);
            std::string expr;
            if (comp_invariant == "depth" || comp_invariant == "depth_rees") {
                auto bar = comp_target.find('|');
                if (bar == std::string::npos)
                    throw std::runtime_error("depth target must look like \"(gens)|M\"");
                expr = comp_invariant + "(" + comp_target.substr(0, bar) + ", " +
                       comp_target.substr(bar + 1) + ")";
            } else if (comp_invariant == "height" || comp_invariant == "pd" ||
                       comp_invariant == "dim" || comp_invariant == "length" ||
                       comp_invariant == "ci_dim") {
                expr = comp_invariant + "(" + comp_target + ")";
            } else {
                throw std::runtime_error("unknown invariant " + comp_invariant);
            }
            std::cout << calab::evaluate_scalar_in_session(text, expr) << "\n";
            return 0;
        }
    } catch (const calab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vlink/corpus.hpp"
#include "vlink/indices.hpp"
#include "vlink/invariants.hpp"
#include "vlink/jsonio.hpp"
#include "vlink/moves.hpp"
#include "vlink/verify.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct InputArgs {
    std::string code;
    std::string file;
};

void add_input_options(CLI::App* sub, InputArgs& in) {
    sub->add_option("-c,--code", in.code, "Gauss code given inline");
    sub->add_option("file", in.file, "file holding the Gauss code, or - for stdin");
}

// exactly one source; throws CLI::ValidationError on misuse so the caller
// reports it as a usage error
std::string read_code(const CLI::App* sub, const InputArgs& in) {
    bool has_code = sub->count("--code") > 0;
    bool has_file = sub->count("file") > 0;
    if (has_code == has_file)
        throw CLI::ValidationError("input", "provide exactly one of -c CODE or FILE");
    if (has_code) return in.code;
    if (in.file == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(in.file);
    if (!f) throw vlink::DomainError("cannot read '" + in.file + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = item.find_last_not_of(" \t");
        out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

int resolve_chord(const vlink::GaussDiagram& d, const std::string& label) {
    int id = d.find_chord(label);
    if (id < 0) throw vlink::DomainError("unknown chord '" + label + "'");
    return id;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"index polynomials of virtual links, with move-based invariance checks"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --convention sit before or after the subcommand

    std::string convention = "default";
    app.add_option("--convention", convention, "endpoint sign and left-arc choice")
        ->check(CLI::IsMember({"default", "a", "b", "c", "d"}))
        ->capture_default_str();

    auto* compute = app.add_subcommand("compute", "compute the invariant report of a diagram");
    InputArgs compute_in;
    add_input_options(compute, compute_in);
    std::string format = "text";
    compute->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify", "rewrite the diagram with random moves and recheck the invariants");
    InputArgs verify_in;
    add_input_options(verify, verify_in);
    int steps = 0;
    uint64_t seed = 1;
    std::string invariants;
    verify->add_option("--steps", steps, "number of random moves")->required();
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--invariants", invariants,
                       "comma-separated subset of span,W,Wbar,P,f,Lts,B,Bbar");

    auto* smooth_cmd = app.add_subcommand("smooth", "splice the diagram at one chord");
    InputArgs smooth_in;
    add_input_options(smooth_cmd, smooth_in);
    std::string chord_label;
    smooth_cmd->add_option("--chord", chord_label, "label of the chord to smooth")->required();

    auto* transform = app.add_subcommand("transform", "mirror the diagram or switch a crossing");
    InputArgs transform_in;
    add_input_options(transform, transform_in);
    std::string op;
    transform->add_option("--op", op, "mirror | crossing-change:LABEL")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "built-in example diagrams");
    std::string corpus_action = "list";
    std::string corpus_name;
    corpus_cmd->add_option("action", corpus_action, "list | show")
        ->check(CLI::IsMember({"list", "show"}));
    corpus_cmd->add_option("name", corpus_name, "fixture name for show");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        vlink::Convention cv = vlink::convention_by_name(convention);

        if (compute->parsed()) {
            vlink::GaussDiagram d = vlink::parse(read_code(compute, compute_in));
            vlink::InvariantReport r = vlink::compute_report(d, cv);
            if (format == "json")
                std::cout << vlink::report_to_json(r).dump(2) << "\n";
            else
                std::cout << vlink::report_to_text(r, cv);
            return 0;
        }

        if (verify->parsed()) {
            vlink::GaussDiagram d = vlink::parse(read_code(verify, verify_in));
            vlink::VerifyOptions opt;
            opt.steps = steps;
            opt.seed = seed;
            opt.invariants = split_list(invariants);
            for (const std::string& n : opt.invariants)
                if (!vlink::is_invariant_name(n)) {
                    std::cerr << "error: unknown invariant '" << n << "'\n";
                    return kExitUsage;
                }
            vlink::VerifyResult res = vlink::verify_invariance(d, cv, opt);
            for (const std::string& line : res.lines) std::cout << line << "\n";
            if (!res.ok) {
                std::cout << "verification FAILED\n";
                return kExitDomain;
            }
            std::cout << "verified: invariants preserved\n";
            return 0;
        }

        if (smooth_cmd->parsed()) {
            vlink::GaussDiagram d = vlink::parse(read_code(smooth_cmd, smooth_in));
            std::cout << vlink::serialize(vlink::smooth(d, resolve_chord(d, chord_label)))
                      << "\n";
            return 0;
        }

        if (transform->parsed()) {
            vlink::GaussDiagram d = vlink::parse(read_code(transform, transform_in));
            if (op == "mirror") {
                std::cout << vlink::serialize(vlink::mirror_all(d)) << "\n";
            } else if (op.rfind("crossing-change:", 0) == 0 &&
                       op.size() > sizeof("crossing-change:") - 1) {
                std::string label = op.substr(sizeof("crossing-change:") - 1);
                std::cout << vlink::serialize(
                                 vlink::crossing_change(d, resolve_chord(d, label)))
                          << "\n";
            } else {
                std::cerr << "error: --op must be mirror or crossing-change:LABEL\n";
                return kExitUsage;
            }
            return 0;
        }

        if (corpus_cmd->parsed()) {
            if (corpus_action == "list") {
                size_t name_w = 0, code_w = 0;
                for (const vlink::Fixture& f : vlink::corpus()) {
                    name_w = std::max(name_w, f.name.size());
                    code_w = std::max(code_w, f.code.size());
                }
                for (const vlink::Fixture& f : vlink::corpus()) {
                    std::cout << f.name << std::string(name_w - f.name.size() + 2, ' ')
                              << f.code << std::string(code_w - f.code.size() + 2, ' ')
                              << f.note << "\n";
                }
                return 0;
            }
            if (corpus_name.empty()) {
                std::cerr << "error: corpus show needs a fixture name\n";
                return kExitUsage;
            }
            const vlink::Fixture* f = vlink::corpus_find(corpus_name);
            if (!f) throw vlink::DomainError("no fixture named '" + corpus_name + "'");
            std::cout << "name: " << f->name << "\ncode: " << f->code << "\nnote: " << f->note
                      << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vlink::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const vlink::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const vlink::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}

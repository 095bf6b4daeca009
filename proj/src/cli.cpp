#include "pyth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "pyth/berggren.hpp"
#include "pyth/json_io.hpp"
#include "pyth/oracle.hpp"
#include "pyth/orthogroup.hpp"

namespace pyth::cli {

namespace {

struct Common {
    std::string field = "q";
    std::string format;
};

void add_field(CLI::App* cmd, Common& common) {
    cmd->add_option("--field", common.field, "coefficient field: q or fp:<p>")->capture_default_str();
}

void add_format(CLI::App* cmd, Common& common, std::string default_format, std::vector<std::string> allowed) {
    common.format = std::move(default_format);
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
}

Triple read_triple(const std::vector<std::string>& parts, FieldSpec spec) {
    return Triple(parse_poly(parts.at(0), spec), parse_poly(parts.at(1), spec), parse_poly(parts.at(2), spec));
}

// "-" reads stdin, "@path" reads a file, anything else is the text itself.
std::string read_payload(const std::string& arg) {
    if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError(0, "cannot open '" + arg.substr(1) + "'");
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    return arg;
}

std::string word_text(const BerggrenWord& w) {
    std::string out = w.c.to_string();
    for (const auto& f : w.word) out += " * M_{" + render(f) + "}";
    out += w.base ? " * S_{" + render(*w.base) + "}" : " * (0, 1, 1)";
    return out;
}

std::string generator_word_text(const GeneratorWord& word) {
    if (word.empty()) return "I";
    std::string out;
    for (const auto& g : word) {
        if (!out.empty()) out += " * ";
        out += generator_name(g);
    }
    return out;
}

std::vector<FieldElement> parse_coefficients(const std::string& list, FieldSpec spec) {
    std::vector<FieldElement> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_element(item, spec));
    if (out.empty()) throw ParseError(0, "empty coefficient list");
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial Pythagorean triples: classification, Berggren words, O_Q(K[t]) factorization", "pyth"};
    app.require_subcommand(1);

    std::function<int()> action;
    Common verify_opts, decomp_opts, recon_opts, gen_opts, fac_opts, census_opts;
    std::vector<std::string> triple_args;
    bool normalize_gcd = false;
    std::string payload;
    int max_height = 2;
    int max_deg = 1;
    unsigned jobs = 1;
    std::string coeffs;

    // verify
    auto* verify = app.add_subcommand("verify", "classify a triple; exit 0 iff Pythagorean and primitive");
    add_field(verify, verify_opts);
    add_format(verify, verify_opts, "text", {"text", "json"});
    verify->add_option("triple", triple_args, "x y z")->expected(3)->required();
    verify->add_flag("--normalize-gcd", normalize_gcd, "divide out a common factor first and report it");
    verify->callback([&] {
        action = [&] {
            const FieldSpec spec = FieldSpec::parse(verify_opts.field);
            Triple q = read_triple(triple_args, spec);
            std::optional<Poly> removed;
            Classification cls = classify(q);
            if (normalize_gcd && cls == Classification::NotPrimitive) {
                GcdSplit split = divide_out_gcd(q);
                removed = split.gcd;
                cls = classify(split.primitive);
            } else if (normalize_gcd) {
                removed = Poly::constant(FieldElement::one(spec));
            }
            if (verify_opts.format == "json") {
                Json j = Json::object();
                j["classification"] = classification_name(cls);
                if (removed) j["removed_gcd"] = render(*removed);
                out << j.dump() << "\n";
            } else {
                out << classification_name(cls) << "\n";
                if (removed && !removed->is_one()) out << "removed gcd: " << render(*removed) << "\n";
            }
            const bool ok = cls != Classification::NotPythagorean && cls != Classification::NotPrimitive;
            return ok ? Success : DomainRejection;
        };
    });

    // decompose
    auto* decomp = app.add_subcommand("decompose", "print the Berggren word of an SPT");
    add_field(decomp, decomp_opts);
    add_format(decomp, decomp_opts, "json", {"json", "text"});
    decomp->add_option("triple", triple_args, "x y z")->expected(3)->required();
    decomp->add_flag("--normalize-gcd", normalize_gcd, "divide out a common factor first and report it");
    decomp->callback([&] {
        action = [&] {
            const FieldSpec spec = FieldSpec::parse(decomp_opts.field);
            Triple q = read_triple(triple_args, spec);
            if (normalize_gcd) {
                GcdSplit split = divide_out_gcd(q);
                if (!split.gcd.is_one()) err << "removed gcd: " << render(split.gcd) << "\n";
                q = split.primitive;
            }
            const BerggrenWord w = decompose(q);
            out << (decomp_opts.format == "json" ? to_json(w).dump() : word_text(w)) << "\n";
            return Success;
        };
    });

    // reconstruct
    auto* recon = app.add_subcommand("reconstruct", "rebuild the triple of a Berggren word (JSON)");
    add_field(recon, recon_opts);
    add_format(recon, recon_opts, "text", {"text", "json"});
    recon->add_option("word", payload, "word JSON, '-' for stdin or @file")->required();
    recon->callback([&] {
        action = [&] {
            const FieldSpec spec = FieldSpec::parse(recon_opts.field);
            const Triple q = reconstruct(word_from_json(parse_json(read_payload(payload)), spec), spec);
            out << (recon_opts.format == "json" ? to_json(q).dump() : render(q)) << "\n";
            return Success;
        };
    });

    // generate
    auto* gen = app.add_subcommand("generate", "enumerate the Berggren forest up to a height");
    add_field(gen, gen_opts);
    add_format(gen, gen_opts, "json", {"json", "dot", "text"});
    gen->add_option("--max-height", max_height, "largest height emitted")->required();
    gen->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    gen->add_option("--coeffs", coeffs, "comma-separated coefficient set (required over q)");
    gen->callback([&] {
        action = [&] {
            const FieldSpec spec = FieldSpec::parse(gen_opts.field);
            EnumerationOptions options;
            options.max_height = max_height;
            options.jobs = jobs;
            if (!coeffs.empty()) options.coefficients = parse_coefficients(coeffs, spec);
            const std::vector<TreeNode> nodes = enumerate_tree(spec, options);
            if (gen_opts.format == "dot") {
                out << tree_to_dot(nodes);
            } else {
                for (const auto& node : nodes) {
                    if (gen_opts.format == "json") {
                        out << to_json(node).dump() << "\n";
                    } else {
                        out << node.height << "\t" << render(node.triple) << "\t" << word_text(node.word) << "\n";
                    }
                }
            }
            return Success;
        };
    });

    // factor
    auto* fac = app.add_subcommand("factor", "factor an orthogonal matrix (JSON) into Rf, Pxy, Tc");
    add_field(fac, fac_opts);
    add_format(fac, fac_opts, "json", {"json", "text"});
    fac->add_option("matrix", payload, "matrix JSON, '-' for stdin or @file")->required();
    fac->callback([&] {
        action = [&] {
            const FieldSpec spec = FieldSpec::parse(fac_opts.field);
            const GeneratorWord word = factor(matrix_from_json(parse_json(read_payload(payload)), spec));
            out << (fac_opts.format == "json" ? to_json(word).dump() : generator_word_text(word)) << "\n";
            return Success;
        };
    });

    // census
    auto* census = app.add_subcommand("census", "cross-check the Berggren forest against brute force");
    add_field(census, census_opts);
    census->add_option("--max-deg", max_deg, "component degree bound")->required();
    census->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    census->callback([&] {
        action = [&] {
            const FieldSpec spec = FieldSpec::parse(census_opts.field);
            const CensusReport report = cross_validate(SearchBounds{spec, max_deg}, jobs);
            out << to_json(report).dump(2) << "\n";
            return report.ok() ? Success : DomainRejection;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : Usage;
    }

    try {
        return action ? action() : Usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::InvalidField ? Usage : DomainRejection;
    }
}

}  // namespace pyth::cli

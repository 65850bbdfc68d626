#include "reduct/classify.hpp"
#include "reduct/decompose.hpp"
#include "reduct/expansion.hpp"
#include "reduct/parse.hpp"
#include "reduct/report.hpp"
#include "reduct/unary.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitParse = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitArity = 4;
constexpr int kExitGuard = 5;

using namespace reduct;

[[noreturn]] void parse_failure(const ParseError& e) {
    std::cerr << "parse error: " << e.message << " (bytes " << e.span.start << ".." << e.span.end
              << ")\n";
    std::exit(kExitParse);
}

std::vector<MPoly> load_collection(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        std::exit(kExitParse);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto r = parse_collection(buf.str());
    if (auto* err = std::get_if<ParseError>(&r)) parse_failure(*err);
    auto ps = std::get<std::vector<MPoly>>(std::move(r));
    if (ps.empty()) {
        std::cerr << "empty collection: " << path << "\n";
        std::exit(kExitEmpty);
    }
    return ps;
}

MPoly parse_one(const std::string& text) {
    auto r = parse_poly(text);
    if (auto* err = std::get_if<ParseError>(&r)) parse_failure(*err);
    return std::get<MPoly>(std::move(r));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const std::string& file) {
    auto ps = load_collection(file);
    ClassificationReport rep = classify(ps);
    emit(envelope("classify", ps, classification_json(rep), {}));
    return 0;
}

int cmd_decompose(const std::string& text) {
    MPoly p = parse_one(text);
    if (p.support().size() != 2) {
        std::cerr << "not genuinely bivariate: " << render(p) << "\n";
        return kExitArity;
    }
    ERVerdict v = er_classify(p);
    emit(envelope("decompose", {p}, er_json(v), {}));
    return 0;
}

int cmd_interdef(const std::string& file_a, const std::string& file_b) {
    auto a = load_collection(file_a);
    auto b = load_collection(file_b);
    InterdefReport rep = interdefinable(a, b);
    std::vector<MPoly> inputs = a;
    inputs.insert(inputs.end(), b.begin(), b.end());
    emit(envelope("interdef", inputs, interdef_json(rep), rep.diagnostics));
    return 0;
}

int cmd_expansion(const std::string& text, const std::string& family_name,
                  const std::vector<long long>& sizes, const std::string& csv_path,
                  int generators, int cap) {
    MPoly p = parse_one(text);
    if (p.support().size() > 2) {
        std::cerr << "expansion experiments take at most two variables\n";
        return kExitArity;
    }
    Family family = family_name == "ap" ? Family::ap : family_name == "gp" ? Family::gp : Family::witness;
    WitnessParams wp;
    for (int i = 0; i < generators; ++i) wp.generators.push_back("g" + std::to_string(i + 1));
    wp.degree_cap = cap;
    try {
        auto rows = expansion_series(p, family, sizes, family == Family::witness ? &wp : nullptr);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) {
                std::cerr << "cannot write " << csv_path << "\n";
                return 1;
            }
            write_csv(csv, rows);
        }
        Json result = expansion_json(family, rows);
        if (!csv_path.empty()) result["csv"] = csv_path;
        emit(envelope("expansion", {p}, result, {}));
    } catch (const guard_error& g) {
        std::cerr << "guard: " << g.what() << "\n";
        return kExitGuard;
    }
    return 0;
}

int cmd_unary(const std::string& text, int bound) {
    MPoly p = parse_one(text);
    if (p.support().size() > 1) {
        std::cerr << "not unary: " << render(p) << "\n";
        return kExitArity;
    }
    DefinableFamily fam = definable_functions(UPoly::from_mpoly(p), bound);
    emit(envelope("unary", {p}, family_json(fam), {}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classifier for polynomial collections over Q: which of the four"
                 " reduct shapes a collection realizes, with verifiable certificates"};
    app.require_subcommand(1);

    std::string file, file_b, text, csv_path;
    std::string family = "ap";
    std::vector<long long> sizes;
    int bound = 8;
    int generators = 1;
    int cap = 2;

    auto* c = app.add_subcommand("classify", "classify a collection file");
    c->add_option("file", file, "collection file, one polynomial per line")->required();

    auto* d = app.add_subcommand("decompose", "additive/multiplicative decomposition of a bivariate polynomial");
    d->add_option("poly", text, "polynomial text, e.g. \"x^2+y^2\"")->required();

    auto* i = app.add_subcommand("interdef", "mutual definability of two collections");
    i->add_option("fileA", file, "first collection file")->required();
    i->add_option("fileB", file_b, "second collection file")->required();

    auto* e = app.add_subcommand("expansion", "image-size growth on structured families");
    e->add_option("poly", text, "polynomial text")->required();
    e->add_option("--family", family, "ap | gp | witness")->check(CLI::IsMember({"ap", "gp", "witness"}));
    e->add_option("--sizes", sizes, "ascending set sizes")->required()->delimiter(',');
    e->add_option("--csv", csv_path, "write rows to this CSV file");
    e->add_option("--generators", generators, "witness family: number of formal generators")
        ->check(CLI::PositiveNumber);
    e->add_option("--cap", cap, "witness family: per-variable degree cap")->check(CLI::PositiveNumber);

    auto* u = app.add_subcommand("unary", "unary maps definable from one polynomial");
    u->add_option("poly", text, "unary polynomial text")->required();
    u->add_option("--bound", bound, "degree bound for the enumeration")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c->parsed()) return cmd_classify(file);
        if (d->parsed()) return cmd_decompose(text);
        if (i->parsed()) return cmd_interdef(file, file_b);
        if (e->parsed()) return cmd_expansion(text, family, sizes, csv_path, generators, cap);
        if (u->parsed()) return cmd_unary(text, bound);
    } catch (const reduct::guard_error& g) {
        std::cerr << "guard: " << g.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

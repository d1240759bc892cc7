/* Copyright 2026 The liemap Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// liemap: command-line frontend. JSON on stdout (or --out); exit 0 ok, 1 semantic failure, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liemap/json_io.hpp"
#include "liemap/rng.hpp"

#ifndef LIEMAP_FIXTURE_DIR
#define LIEMAP_FIXTURE_DIR "fixtures"
#endif

using namespace liemap;

namespace {

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "@path" reads the file, anything else is taken literally.
std::string inline_or_file(const std::string& text) { return text.starts_with("@") ? read_file(text.substr(1)) : text; }

// Looks in the working directory first, then the shipped fixture directory.
std::string resolve_fixture(const std::string& name) {
    if (std::filesystem::exists(name)) return name;
    const std::filesystem::path shipped = std::filesystem::path(LIEMAP_FIXTURE_DIR) / name;
    if (std::filesystem::exists(shipped)) return shipped.string();
    return name;
}

std::string poly_source(const std::string& text) {
    return text.starts_with("@") ? read_file(resolve_fixture(text.substr(1))) : text;
}

struct Common {
    std::string type;
    int rank = 0;
    std::string algebra;
    std::string field = "Q";
    std::string poly;
    std::string mode;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget;
    unsigned workers = 1;
    std::string expect;
    std::string out;
};

ChevalleyAlgebra resolve_algebra(const Common& c, const Field& field) {
    std::string type = c.type;
    int rank = c.rank;
    if (!c.algebra.empty()) {
        if (c.algebra.size() < 2 || !std::isalpha(static_cast<unsigned char>(c.algebra[0])))
            throw UsageError("--algebra expects a type letter and rank, e.g. A2");
        type = c.algebra.substr(0, 1);
        try {
            rank = std::stoi(c.algebra.substr(1));
        } catch (const std::exception&) {
            throw UsageError("--algebra expects a type letter and rank, e.g. A2");
        }
    }
    if (type.empty() || rank <= 0) throw UsageError("an algebra is required: --algebra A2 or --type A --rank 2");
    return ChevalleyAlgebra::build(parse_root_type(type), rank, field);
}

void emit(const Json& j, const Common& c) {
    const std::string text = j.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + c.out + "'");
    out << text;
}

bool usage_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::ParseError:
        case ErrorCode::NotPrime:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::FieldMismatch:
        case ErrorCode::Unsupported: return true;
        default: return false;
    }
}

std::vector<mpq_class> parse_coeffs(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            mpq_class q(item);
            q.canonicalize();
            out.push_back(q);
        } catch (const std::exception&) {
            throw UsageError("bad coefficient '" + item + "' in --coeffs");
        }
    }
    if (out.empty()) throw UsageError("--coeffs needs at least one value");
    return out;
}

Json with_schema(const char* name, Json body) {
    Json out{{"schema", std::string("liemap.") + name + "/1"}};
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

// ---- subcommands ----

int cmd_roots(const Common& c) {
    Common cc = c;
    const Field field = Field::rationals();
    const ChevalleyAlgebra alg = resolve_algebra(cc, field);
    emit(with_schema("roots", root_system_json(alg.root_system())), c);
    return kOk;
}

int cmd_algebra(const Common& c, bool structure) {
    const ChevalleyAlgebra alg = resolve_algebra(c, Field::parse(c.field));
    emit(with_schema("algebra", algebra_json(alg, structure)), c);
    return kOk;
}

int cmd_parse(const Common& c) {
    const std::string src = poly_source(c.poly);
    const LiePoly p = parse_poly(src);
    Json terms = Json::array();
    const LyndonForm form = normal_form(p);
    for (const auto& [w, q] : form)
        terms.push_back(Json{{"word", word_to_string(w)}, {"coeff", q.get_str()},
                             {"bracketing", standard_bracketing(w).to_string()}});
    Json out{{"printed", p.to_string()}, {"arity", p.arity()}, {"tree_degree", p.tree_degree()},
             {"is_zero", form.empty()}};
    if (!form.empty()) {
        out["min_degree"] = min_monomial_degree(p);
        out["max_degree"] = max_monomial_degree(p);
    }
    out["normal_form"] = std::move(terms);
    emit(with_schema("parse", std::move(out)), c);
    return kOk;
}

int cmd_identity(const Common& c, std::uint64_t grid, int bits) {
    const Field field = Field::parse(c.field);
    const LiePoly p = parse_poly(poly_source(c.poly));
    IdentityOptions opts;
    if (c.mode.empty() || c.mode == "exact") opts.mode = IdentityMode::Exact;
    else if (c.mode == "randomized") opts.mode = IdentityMode::Randomized;
    else throw UsageError("--mode must be exact or randomized");
    opts.seed = c.seed;
    opts.grid = grid;
    opts.security_bits = bits;
    const IdentityVerdict v = is_identity_sl2(p, field, opts);
    Json out = identity_json(v, p, field);
    out["seed"] = c.seed;
    emit(with_schema("identity", std::move(out)), c);
    if (!c.expect.empty() && c.expect != identity_result_name(v.result)) return kSemantic;
    return kOk;
}

int cmd_witness(const Common& c, const std::string& realization, const std::string& fixture) {
    std::string path;
    if (fixture == "paper-a2" || fixture == "paper-b2") path = resolve_fixture(fixture + ".json");
    else if (!fixture.empty()) path = fixture;
    else throw UsageError("witness needs --fixtures paper-a2|paper-b2 or a fixture path");
    const Json j = Json::parse(read_file(path));
    const Field field = Field::parse(j.value("field", std::string("Q")));
    const Realization real = Realization::parse(j.at("realization").get<std::string>());
    if (!realization.empty() && !(Realization::parse(realization) == real))
        throw UsageError("fixture is for " + real.name() + ", not " + realization);
    std::vector<MatrixElement> first, second;
    for (const auto& m : j.at("first")) first.push_back(matrix_from_json(m, field, &real));
    for (const auto& m : j.at("second")) second.push_back(matrix_from_json(m, field, &real));
    const LiePoly p = parse_poly(c.poly.empty() ? j.at("polynomial").get<std::string>() : poly_source(c.poly));
    const DominanceReport r = dominance_witness_check(p, first, second);
    Json out{{"polynomial", p.to_string()}, {"realization", real.name()}, {"field", field.name()}};
    const Json body = dominance_json(r);
    for (const auto& [k, v] : body.items()) out[k] = v;
    emit(with_schema("witness", std::move(out)), c);
    const std::string want = c.expect.empty() ? "confirmed" : c.expect;
    return want == dominance_result_name(r.result) ? kOk : kSemantic;
}

int cmd_witness_search(const Common& c, const std::string& realization) {
    const Field field = Field::parse(c.field);
    const LiePoly p = parse_poly(poly_source(c.poly));
    if (realization.empty()) throw UsageError("--realization is required");
    WitnessSearchOptions opts;
    opts.seed = c.seed;
    if (c.budget) opts.budget = *c.budget;
    const WitnessSearchResult r = dominance_witness_search(p, Realization::parse(realization), field, opts);
    Json out{{"polynomial", p.to_string()}, {"realization", realization}, {"field", field.name()}};
    const Json body = witness_search_json(r, opts.seed, opts.budget);
    for (const auto& [k, v] : body.items()) out[k] = v;
    emit(with_schema("witness-search", std::move(out)), c);
    return r.found ? kOk : kSemantic;
}

AlgElement random_noncentral(const ChevalleyAlgebra& alg, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Vector v;
        for (std::size_t k = 0; k < alg.dim(); ++k)
            v.push_back(alg.field().is_finite() ? alg.field().element(rng.below(alg.field().modulus()))
                                                : alg.field().from_int(rng.between(-9, 9)));
        AlgElement x = alg.element(std::move(v));
        if (!alg.is_central(x)) return x;
    }
}

int cmd_engel(const Common& c, const std::string& coeffs, int m, const std::string& target) {
    const ChevalleyAlgebra alg = resolve_algebra(c, Field::parse(c.field));
    std::vector<mpq_class> a;
    if (!coeffs.empty()) {
        a = parse_coeffs(coeffs);
    } else {
        if (m < 1) throw UsageError("engel-solve needs --m or --coeffs");
        a.assign(static_cast<std::size_t>(m), mpq_class(0));
        a.back() = 1;
    }
    const EngelSpec spec = make_engel(a).second;
    AlgElement x = target.empty() ? random_noncentral(alg, c.seed)
                                  : element_from_json(alg, Json::parse(inline_or_file(target)));
    GaussOptions gopts;
    gopts.seed = c.seed;
    if (c.budget) gopts.budget = *c.budget;
    const EngelSolution s = engel_solve(alg, spec, x, gopts);
    Json out = engel_json(alg, spec, x, s, c.seed);
    out["target_source"] = target.empty() ? "seeded_random" : "given";
    emit(with_schema("engel-solve", std::move(out)), c);
    return kOk;
}

int cmd_scan(const Common& c, std::uint64_t samples) {
    const ChevalleyAlgebra alg = resolve_algebra(c, Field::parse(c.field));
    const LiePoly p = parse_poly(poly_source(c.poly));
    ScanOptions opts;
    if (c.mode.empty() || c.mode == "exhaustive") opts.mode = ScanMode::Exhaustive;
    else if (c.mode == "sampled") opts.mode = ScanMode::Sampled;
    else throw UsageError("--mode must be exhaustive or sampled");
    opts.samples = samples;
    opts.seed = c.seed;
    opts.workers = c.workers;
    opts.budget = c.budget;
    const ImageReport r = image_scan(alg, p, opts);
    emit(with_schema("scan", scan_json(alg, r)), c);
    return kOk;
}

int cmd_probe(const Common& c, int m_from, int m_to) {
    const ChevalleyAlgebra alg = resolve_algebra(c, Field::parse(c.field));
    ScanOptions opts;
    opts.workers = c.workers;
    opts.budget = c.budget;
    const ProbeReport r = central_image_probe(alg, m_from, m_to, opts);
    emit(with_schema("central-probe", probe_json(r)), c);
    return kOk;
}

int cmd_example48(const Common& c) {
    Common cc = c;
    cc.algebra = "A1";
    const Field field = Field::parse(c.field == "Q" ? "F5" : c.field);
    if (!field.is_finite()) throw UsageError("example48 needs a finite field");
    const ChevalleyAlgebra sl2 = resolve_algebra(cc, field);
    const LiePoly p = parse_poly(example48_polynomial());
    ScanOptions opts;
    opts.workers = c.workers;
    opts.budget = c.budget;
    const ImageReport r = image_scan(sl2, p, opts);
    // m e and m f with m != 0
    Json line_hits = Json::array();
    for (std::uint64_t k = 1; k < field.modulus(); ++k)
        for (std::size_t root = 0; root < 2; ++root) {
            AlgElement x = sl2.zero();
            x.coeffs[sl2.e_index(root)] = field.element(k);
            const std::uint64_t idx = element_index(x);
            if (r.attained_element(idx)) line_hits.push_back(idx);
        }
    std::uint64_t tuples = 0, printed = 0, corrected = 0;
    Json first_mismatch = nullptr;
    const std::uint64_t q = field.modulus();
    for (std::uint64_t n = 0; n < q * q * q * q; ++n) {
        const Scalar a = field.element(n % q), b = field.element(n / q % q), cc4 = field.element(n / q / q % q),
                     d = field.element(n / q / q / q);
        AlgElement x = sl2.zero(), y = sl2.zero();
        x.coeffs[sl2.e_index(0)] = a;
        x.coeffs[sl2.e_index(1)] = b;
        y.coeffs[sl2.e_index(1)] = cc4;
        y.coeffs[0] = d;
        const AlgElement direct = evaluate(p, std::vector<AlgElement>{x, y}, sl2);
        const AlgElement form = example48_closed_form(sl2, a, b, cc4, d);
        ++tuples;
        if (form == direct) ++printed;
        else if (first_mismatch.is_null())
            first_mismatch = Json{{"abcd", Json::array({scalar_json(a), scalar_json(b), scalar_json(cc4), scalar_json(d)})},
                                  {"direct", element_json(sl2, direct)},
                                  {"closed_form", element_json(sl2, form)}};
        if (example48_closed_form_corrected(sl2, a, b, cc4, d) == direct) ++corrected;
    }
    Json out{{"polynomial", p.to_string()},
             {"field", field.name()},
             {"scan", Json{{"evaluated", r.evaluated},
                           {"attained", r.attained},
                           {"codomain_size", r.codomain_size},
                           {"line_elements_attained", std::move(line_hits)}}},
             {"closed_form", Json{{"assignment", "X = a e + b f, Y = c f + d h"},
                                  {"tuples", tuples},
                                  {"printed_matches", printed},
                                  {"corrected_matches", corrected},
                                  {"first_printed_mismatch", std::move(first_mismatch)}}}};
    const bool ok = out["scan"]["line_elements_attained"].empty() && corrected == tuples;
    out["no_line_elements"] = out["scan"]["line_elements_attained"].empty();
    emit(with_schema("example48", std::move(out)), c);
    return ok ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liemap: polynomial maps on Chevalley Lie algebras"};
    app.require_subcommand(1);
    Common c;
    bool structure = false;
    std::string realization, fixture, coeffs, target;
    int m = 0, m_from = 1, m_to = 12, bits = 40;
    std::uint64_t samples = 100000, grid = 1ULL << 20;

    auto algebra_opts = [&](CLI::App* s) {
        s->add_option("--type", c.type, "root system type (A, B, C, D, G)");
        s->add_option("--rank", c.rank, "rank");
        s->add_option("--algebra", c.algebra, "type and rank together, e.g. A2");
    };
    auto field_opt = [&](CLI::App* s) { s->add_option("--field", c.field, "Q, Fp:N or FN")->capture_default_str(); };
    auto poly_opt = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--poly", c.poly, "Lie polynomial, or @file");
        if (required) o->required();
    };
    auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", c.seed, "random seed")->capture_default_str(); };

    auto* roots = app.add_subcommand("roots", "root system data");
    algebra_opts(roots);
    auto* algebra = app.add_subcommand("algebra", "Chevalley algebra summary");
    algebra_opts(algebra);
    field_opt(algebra);
    algebra->add_flag("--print-structure", structure, "include the structure constant table");
    auto* parse = app.add_subcommand("parse", "parse and normalize a Lie polynomial");
    poly_opt(parse, true);
    auto* identity = app.add_subcommand("identity", "identity test in sl(2)");
    poly_opt(identity, true);
    field_opt(identity);
    seed_opt(identity);
    identity->add_option("--mode", c.mode, "exact or randomized");
    identity->add_option("--grid", grid, "randomized sample grid size")->capture_default_str();
    identity->add_option("--bits", bits, "randomized security level")->capture_default_str();
    identity->add_option("--expect", c.expect, "exit 1 unless the result matches");
    auto* witness = app.add_subcommand("witness", "check a theta witness pair");
    witness->add_option("--realization", realization, "sl3 or so5");
    witness->add_option("--fixtures", fixture, "paper-a2, paper-b2 or a fixture path");
    poly_opt(witness, false);
    witness->add_option("--expect", c.expect, "confirmed, not_separated or undefined");
    auto* wsearch = app.add_subcommand("witness-search", "search for a theta witness pair");
    wsearch->add_option("--realization", realization, "sl3 or so5")->required();
    poly_opt(wsearch, true);
    field_opt(wsearch);
    seed_opt(wsearch);
    wsearch->add_option("--budget", c.budget, "sampled assignments");
    auto* engel = app.add_subcommand("engel-solve", "solve P(X, Y) = target for an Engel polynomial");
    algebra_opts(engel);
    field_opt(engel);
    seed_opt(engel);
    engel->add_option("--m", m, "plain Engel degree E_m");
    engel->add_option("--coeffs", coeffs, "a_1,...,a_m for sum a_i E_i");
    engel->add_option("--target", target, "element JSON or @file; seeded random when absent");
    engel->add_option("--budget", c.budget, "conjugation search budget");
    auto* scan = app.add_subcommand("scan", "image scan over a finite field");
    algebra_opts(scan);
    field_opt(scan);
    poly_opt(scan, true);
    seed_opt(scan);
    scan->add_option("--mode", c.mode, "exhaustive or sampled");
    scan->add_option("--samples", samples, "sampled mode draw count")->capture_default_str();
    scan->add_option("--workers", c.workers, "parallel workers")->capture_default_str();
    scan->add_option("--budget", c.budget, "evaluation cap (default LIEMAP_BUDGET or 5e7)");
    auto* probe = app.add_subcommand("central-probe", "central values of E_m over a finite field");
    algebra_opts(probe);
    field_opt(probe);
    probe->add_option("--m-from", m_from, "first m")->capture_default_str();
    probe->add_option("--m-to", m_to, "last m")->capture_default_str();
    probe->add_option("--workers", c.workers, "parallel workers")->capture_default_str();
    probe->add_option("--budget", c.budget, "pair cap (default LIEMAP_BUDGET or 5e7)");
    auto* ex48 = app.add_subcommand("example48", "sl(2) closed-form check for [[[X,Y],X],[[X,Y],Y]]");
    ex48->add_option("--field", c.field, "finite field, default F5");
    ex48->add_option("--workers", c.workers, "parallel workers");
    for (auto* s : app.get_subcommands({})) s->add_option("--out", c.out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*roots) return cmd_roots(c);
        if (*algebra) return cmd_algebra(c, structure);
        if (*parse) return cmd_parse(c);
        if (*identity) return cmd_identity(c, grid, bits);
        if (*witness) return cmd_witness(c, realization, fixture);
        if (*wsearch) return cmd_witness_search(c, realization);
        if (*engel) return cmd_engel(c, coeffs, m, target);
        if (*scan) return cmd_scan(c, samples);
        if (*probe) return cmd_probe(c, m_from, m_to);
        if (*ex48) return cmd_example48(c);
    } catch (const UsageError& e) {
        std::cerr << "liemap: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "liemap: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        std::cout << error_json(e).dump(2) << "\n";
        return usage_code(e.code()) ? kUsage : kSemantic;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "liemap: bad JSON: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

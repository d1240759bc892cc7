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
// Exhaustive and sampled image scans over finite fields.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_map>

#include "liemap/maps.hpp"
#include "liemap/rng.hpp"

namespace liemap {

namespace {

constexpr std::uint64_t kMissed = UINT64_MAX;
constexpr std::uint64_t kMaxCodomain = 1ULL << 24;

// p^e, or nullopt on overflow past 2^63.
std::optional<std::uint64_t> power(std::uint64_t p, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < e; ++k) {
        if (out > (1ULL << 63) / p) return std::nullopt;
        out *= p;
    }
    return out;
}

void require_finite(const ChevalleyAlgebra& alg) {
    if (!alg.field().is_finite()) throw Error(ErrorCode::Unsupported, "scans need a finite field");
}

struct Entry {
    std::uint32_t i, j, k;
    std::uint64_t c;
};

std::vector<Entry> modular_table(const ChevalleyAlgebra& alg) {
    const std::uint64_t p = alg.field().modulus();
    std::vector<Entry> out;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            for (const auto& t : alg.structure(i, j)) {
                const long long c = ((t.coeff % static_cast<long long>(p)) + static_cast<long long>(p)) %
                                    static_cast<long long>(p);
                if (c) out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                      static_cast<std::uint32_t>(t.index), static_cast<std::uint64_t>(c)});
            }
    return out;
}

// Straight-line program for a Lie polynomial over F_p; slot values are coordinate vectors.
class Kernel {
public:
    Kernel(const ChevalleyAlgebra& alg, const LiePoly& poly)
        : p_(alg.field().modulus()), d_(alg.dim()), table_(modular_table(alg)) {
        out_ = compile(poly.root(), alg.field());
    }

    std::size_t slots() const noexcept { return ops_.size(); }

    // `vars` holds arity * dim residues; returns the output slot.
    const std::vector<std::uint64_t>& run(const std::vector<std::uint64_t>& vars,
                                          std::vector<std::vector<std::uint64_t>>& work) const {
        work.resize(ops_.size());
        for (std::size_t s = 0; s < ops_.size(); ++s) {
            const Op& op = ops_[s];
            auto& dst = work[s];
            dst.assign(d_, 0);
            switch (op.kind) {
                case LiePoly::Kind::Var:
                    std::copy_n(vars.begin() + static_cast<std::ptrdiff_t>(op.var * d_), d_, dst.begin());
                    break;
                case LiePoly::Kind::Bracket: {
                    const auto& x = work[op.a];
                    const auto& y = work[op.b];
                    for (const auto& e : table_)
                        if (x[e.i] && y[e.j]) dst[e.k] = (dst[e.k] + x[e.i] * y[e.j] % p_ * e.c) % p_;
                    break;
                }
                case LiePoly::Kind::Sum:
                    for (const auto& [c, slot] : op.terms)
                        for (std::size_t k = 0; k < d_; ++k) dst[k] = (dst[k] + c * work[slot][k]) % p_;
                    break;
            }
        }
        return work[out_];
    }

private:
    struct Op {
        LiePoly::Kind kind;
        std::size_t var = 0, a = 0, b = 0;
        std::vector<std::pair<std::uint64_t, std::size_t>> terms;
    };

    std::size_t compile(const LiePoly::Node& node, const Field& field) {
        if (auto it = seen_.find(&node); it != seen_.end()) return it->second;
        Op op;
        op.kind = node.kind;
        if (node.kind == LiePoly::Kind::Var) {
            op.var = static_cast<std::size_t>(node.var - 1);
        } else if (node.kind == LiePoly::Kind::Bracket) {
            op.a = compile(*node.left, field);
            op.b = compile(*node.right, field);
        } else {
            for (const auto& [c, child] : node.terms) {
                const std::uint64_t r = field.from_rational(c).residue_value();
                if (r) op.terms.emplace_back(r, compile(*child, field));
            }
        }
        ops_.push_back(std::move(op));
        seen_[&node] = ops_.size() - 1;
        return ops_.size() - 1;
    }

    std::uint64_t p_;
    std::size_t d_;
    std::vector<Entry> table_;
    std::vector<Op> ops_;
    std::unordered_map<const LiePoly::Node*, std::size_t> seen_;
    std::size_t out_ = 0;
};

std::uint64_t index_of(const std::vector<std::uint64_t>& coords, std::uint64_t p) {
    std::uint64_t idx = 0;
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) idx = idx * p + *it;
    return idx;
}

void decode(std::uint64_t index, std::uint64_t p, std::vector<std::uint64_t>& digits) {
    for (auto& x : digits) {
        x = index % p;
        index /= p;
    }
}

// Element indices of the F_p-span of the center.
std::vector<char> central_flags(const ChevalleyAlgebra& alg, std::uint64_t codomain) {
    const std::uint64_t p = alg.field().modulus();
    std::vector<char> flags(codomain, 0);
    const auto basis = alg.center();
    std::vector<std::uint64_t> combo(basis.size(), 0);
    const std::uint64_t count = *power(p, basis.size());
    for (std::uint64_t n = 0; n < count; ++n) {
        decode(n, p, combo);
        AlgElement z = alg.zero();
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (combo[b]) z = alg.add(z, alg.scale(alg.field().element(combo[b]), basis[b]));
        flags[element_index(z)] = 1;
    }
    return flags;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split(std::uint64_t total, unsigned workers) {
    workers = std::max(1u, workers);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t chunk = total / workers, extra = total % workers;
    std::uint64_t lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
        if (hi > lo) out.emplace_back(lo, hi);
        lo = hi;
    }
    return out;
}

void sample_digits(std::uint64_t seed, std::uint64_t sample, std::uint64_t p, std::vector<std::uint64_t>& digits) {
    for (std::size_t c = 0; c < digits.size(); ++c) digits[c] = counter_draw(seed, sample * digits.size() + c) % p;
}

}  // namespace

std::uint64_t default_scan_budget() {
    if (const char* env = std::getenv("LIEMAP_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ULL;
}

std::uint64_t element_index(const AlgElement& x) {
    if (x.coeffs.empty()) return 0;
    const Field& field = x.coeffs.front().field();
    if (!field.is_finite()) throw Error(ErrorCode::Unsupported, "element indices need a finite field");
    const std::uint64_t p = field.modulus();
    std::vector<std::uint64_t> coords;
    for (const auto& c : x.coeffs) coords.push_back(c.residue_value());
    if (!power(p, coords.size())) throw Error(ErrorCode::Unsupported, "element index overflows 64 bits");
    return index_of(coords, p);
}

AlgElement element_at(const ChevalleyAlgebra& alg, std::uint64_t index) {
    require_finite(alg);
    const std::uint64_t p = alg.field().modulus();
    auto size = power(p, alg.dim());
    if (!size || index >= *size) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    std::vector<std::uint64_t> digits(alg.dim());
    decode(index, p, digits);
    Vector coeffs;
    for (auto d : digits) coeffs.push_back(alg.field().element(d));
    return alg.element(std::move(coeffs));
}

ImageReport image_scan(const ChevalleyAlgebra& alg, const LiePoly& poly, const ScanOptions& options) {
    require_finite(alg);
    const std::uint64_t p = alg.field().modulus();
    const std::size_t d = alg.dim();
    const std::size_t arity = static_cast<std::size_t>(std::max(poly.arity(), 1));
    const std::uint64_t budget = options.budget.value_or(default_scan_budget());
    auto codomain = power(p, d);
    if (!codomain || *codomain > kMaxCodomain)
        throw Error(ErrorCode::BudgetExceeded, alg.label() + " has too many elements to tabulate");

    ImageReport rep;
    rep.algebra = alg.label();
    rep.polynomial = poly.to_string();
    rep.field = alg.field().name();
    rep.mode = options.mode;
    rep.seed = options.seed;
    rep.arity = arity;
    rep.codomain_size = *codomain;
    const auto domain = power(p, d * arity);
    rep.domain_size = domain.value_or(UINT64_MAX);

    std::uint64_t total = 0;
    if (options.mode == ScanMode::Exhaustive) {
        if (!domain || *domain > budget)
            throw Error(ErrorCode::BudgetExceeded, "exhaustive scan needs " +
                                                       (domain ? std::to_string(*domain) : std::string("> 2^63")) +
                                                       " evaluations, budget is " + std::to_string(budget));
        total = *domain;
    } else {
        if (options.samples > budget)
            throw Error(ErrorCode::BudgetExceeded, "sample count exceeds the budget of " + std::to_string(budget));
        total = options.samples;
    }

    const Kernel kernel(alg, poly);
    const auto ranges = split(total, options.workers);
    std::vector<std::vector<std::uint64_t>> keys(ranges.size(), std::vector<std::uint64_t>(*codomain, kMissed));
    auto work = [&](std::size_t w) {
        auto& mine = keys[w];
        std::vector<std::uint64_t> digits(arity * d);
        std::vector<std::vector<std::uint64_t>> scratch;
        const auto [lo, hi] = ranges[w];
        if (options.mode == ScanMode::Exhaustive) decode(lo, p, digits);
        for (std::uint64_t n = lo; n < hi; ++n) {
            if (options.mode == ScanMode::Sampled) sample_digits(options.seed, n, p, digits);
            const std::uint64_t e = index_of(kernel.run(digits, scratch), p);
            if (n < mine[e]) mine[e] = n;
            if (options.mode == ScanMode::Exhaustive)
                for (auto& x : digits) {
                    if (++x < p) break;
                    x = 0;
                }
        }
    };
    if (ranges.size() <= 1) {
        if (!ranges.empty()) work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    rep.evaluated = total;
    rep.preimage_key.assign(*codomain, kMissed);
    for (const auto& mine : keys)
        for (std::uint64_t e = 0; e < *codomain; ++e) rep.preimage_key[e] = std::min(rep.preimage_key[e], mine[e]);

    const auto central = central_flags(alg, *codomain);
    for (std::uint64_t e = 0; e < *codomain; ++e) {
        const bool hit = rep.preimage_key[e] != kMissed;
        rep.attained += hit;
        if (e == 0) {
            rep.zero_attained = hit;
        } else if (central[e]) {
            ++rep.central_nonzero_total;
            if (hit) {
                ++rep.central_nonzero_attained;
                rep.central_hits.push_back(CentralHit{e, preimage_of(rep, alg, e)});
            }
        } else {
            ++rep.noncentral_total;
            rep.noncentral_attained += hit;
        }
        if (!hit && rep.missed.size() < options.missed_limit) rep.missed.push_back(e);
    }
    rep.contains_all_noncentral = rep.noncentral_attained == rep.noncentral_total;
    return rep;
}

std::vector<std::uint64_t> preimage_of(const ImageReport& report, const ChevalleyAlgebra& alg, std::uint64_t element) {
    require_finite(alg);
    if (!report.attained_element(element))
        throw Error(ErrorCode::NotFound, "element " + std::to_string(element) + " was not attained");
    const std::uint64_t p = alg.field().modulus();
    const std::size_t d = alg.dim();
    const std::uint64_t key = report.preimage_key[element];
    std::vector<std::uint64_t> digits(report.arity * d);
    if (report.mode == ScanMode::Exhaustive) decode(key, p, digits);
    else sample_digits(report.seed, key, p, digits);
    std::vector<std::uint64_t> out;
    for (std::size_t v = 0; v < report.arity; ++v)
        out.push_back(index_of(std::vector<std::uint64_t>(digits.begin() + static_cast<std::ptrdiff_t>(v * d),
                                                          digits.begin() + static_cast<std::ptrdiff_t>((v + 1) * d)),
                               p));
    return out;
}

ProbeReport central_image_probe(const ChevalleyAlgebra& alg, int m_from, int m_to, const ScanOptions& options) {
    require_finite(alg);
    const std::uint64_t p = alg.field().modulus();
    const std::size_t d = alg.dim();
    const std::uint64_t budget = options.budget.value_or(default_scan_budget());
    ProbeReport rep;
    rep.algebra = alg.label();
    rep.m_from = m_from;
    rep.m_to = m_to;
    if (alg.center().empty()) throw Error(ErrorCode::InvalidArgument, alg.label() + " has trivial center");
    auto codomain = power(p, d);
    auto pairs = power(p, 2 * d);
    if (!codomain || !pairs || *pairs > budget || *codomain > kMaxCodomain)
        throw Error(ErrorCode::BudgetExceeded,
                    "probe needs " + (pairs ? std::to_string(*pairs) : std::string("> 2^63")) +
                        " pairs, budget is " + std::to_string(budget));
    const auto central = central_flags(alg, *codomain);
    for (std::uint64_t e = 1; e < *codomain; ++e)
        if (central[e]) rep.center_elements.push_back(e);
    if (m_from < 1) m_from = 1;
    if (m_from > m_to) return rep;
    rep.evaluated_pairs = *pairs;

    const auto table = modular_table(alg);
    using HitMap = std::map<std::pair<int, std::uint64_t>, std::uint64_t>;
    const auto ranges = split(*codomain, options.workers);
    std::vector<HitMap> found(ranges.size());
    // E_m(X, Y) = (-ad Y)^m X; per Y the map z -> -[Y, z] is tabulated over all element indices.
    auto work = [&](std::size_t w) {
        std::vector<std::uint64_t> ydig(d), v(d), next(*codomain);
        std::vector<std::vector<std::uint64_t>> cols(d, std::vector<std::uint64_t>(d));
        for (std::uint64_t y = ranges[w].first; y < ranges[w].second; ++y) {
            decode(y, p, ydig);
            for (auto& c : cols) std::fill(c.begin(), c.end(), 0);
            // column i: [b_i, Y] = sum_j y_j [b_i, b_j]
            for (const auto& e : table)
                if (ydig[e.j]) cols[e.i][e.k] = (cols[e.i][e.k] + ydig[e.j] * e.c) % p;
            std::fill(v.begin(), v.end(), 0);
            std::vector<std::uint64_t> zdig(d, 0);
            next[0] = 0;
            for (std::uint64_t z = 1; z < *codomain; ++z) {
                // Odometer step: every digit touched moves by +1 mod p, so v gains its column.
                for (std::size_t k = 0; k < d; ++k) {
                    for (std::size_t r = 0; r < d; ++r) v[r] = (v[r] + cols[k][r]) % p;
                    if (++zdig[k] < p) break;
                    zdig[k] = 0;
                }
                next[z] = index_of(v, p);
            }
            for (std::uint64_t x = 0; x < *codomain; ++x) {
                std::uint64_t cur = x;
                for (int m = 1; m <= m_to; ++m) {
                    cur = next[cur];
                    if (cur == 0) break;
                    if (m >= m_from && central[cur]) {
                        const std::uint64_t key = x + y * *codomain;
                        auto [it, fresh] = found[w].emplace(std::make_pair(m, cur), key);
                        if (!fresh && key < it->second) it->second = key;
                    }
                }
            }
        }
    };
    if (ranges.size() == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < ranges.size(); ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    HitMap merged;
    for (const auto& f : found)
        for (const auto& [k, key] : f) {
            auto [it, fresh] = merged.emplace(k, key);
            if (!fresh && key < it->second) it->second = key;
        }
    for (int m = m_from; m <= m_to; ++m) {
        ProbeRow row{m, {}};
        for (auto it = merged.lower_bound({m, 0}); it != merged.end() && it->first.first == m; ++it)
            row.hits.push_back(CentralHit{it->first.second, {it->second % *codomain, it->second / *codomain}});
        rep.rows.push_back(std::move(row));
    }
    for (int m = m_to; m >= m_from && rep.rows[static_cast<std::size_t>(m - m_from)].hits.empty(); --m) rep.m0 = m;
    return rep;
}

const char* example48_polynomial() noexcept { return "[[[X,Y],X],[[X,Y],Y]]"; }

namespace {

AlgElement closed_form(const ChevalleyAlgebra& sl2, const Scalar& a, const Scalar& b, const Scalar& c,
                       const Scalar& d, int e_sign) {
    const Field& f = sl2.field();
    if (sl2.root_system().type() != RootType::A || sl2.rank() != 1)
        throw Error(ErrorCode::InvalidArgument, "closed form is for sl(2)");
    if (f.characteristic() == 2) throw Error(ErrorCode::CharacteristicRejected, "closed form needs char != 2");
    const Scalar s = f.from_int(4) * b * d * d - a * c * c;
    Vector coeffs(3, f.zero());
    coeffs[0] = f.from_int(4) * a * a * c * s;
    coeffs[sl2.e_index(0)] = f.from_int(8 * e_sign) * a * a * d * s;
    coeffs[sl2.e_index(1)] = f.from_int(8) * a * b * d * s;
    return sl2.element(std::move(coeffs));
}

}  // namespace

AlgElement example48_closed_form(const ChevalleyAlgebra& sl2, const Scalar& a, const Scalar& b, const Scalar& c,
                                 const Scalar& d) {
    return closed_form(sl2, a, b, c, d, 1);
}

AlgElement example48_closed_form_corrected(const ChevalleyAlgebra& sl2, const Scalar& a, const Scalar& b,
                                           const Scalar& c, const Scalar& d) {
    return closed_form(sl2, a, b, c, d, -1);
}

}  // namespace liemap

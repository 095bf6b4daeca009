#include "pyth/oracle.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "pyth/berggren.hpp"
#include "pyth/orthogroup.hpp"

namespace pyth {

namespace {

using Residues = std::vector<std::uint32_t>;

// Residue-vector polynomial helpers, deliberately separate from Poly.
void trim(Residues& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e != 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Residues remainder(Residues a, const Residues& b, std::uint32_t p) {
    const std::uint32_t inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t q = static_cast<std::uint64_t>(a.back()) * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - q * b[j] % p) % p);
        }
        trim(a);
    }
    return a;
}

Residues residue_gcd(Residues a, Residues b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Residues r = remainder(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

struct Space {
    std::uint32_t p;
    std::size_t n;           // coefficients per polynomial
    std::size_t count;       // p^n polynomials
    std::size_t sq_len;      // 2n - 1
    std::vector<std::uint32_t> coeffs;   // count * n
    std::vector<std::uint32_t> squares;  // count * sq_len

    Residues poly(std::size_t i) const {
        Residues r(coeffs.begin() + static_cast<std::ptrdiff_t>(i * n),
                   coeffs.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
        trim(r);
        return r;
    }
};

Space build_space(std::uint32_t p, std::size_t n) {
    Space s{p, n, 1, 2 * n - 1, {}, {}};
    for (std::size_t i = 0; i < n; ++i) s.count *= p;
    s.coeffs.resize(s.count * n);
    s.squares.assign(s.count * s.sq_len, 0);
    for (std::size_t i = 0; i < s.count; ++i) {
        std::size_t v = i;
        for (std::size_t j = 0; j < n; ++j) {
            s.coeffs[i * n + j] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                auto& slot = s.squares[i * s.sq_len + a + b];
                slot = static_cast<std::uint32_t>(
                    (slot + static_cast<std::uint64_t>(s.coeffs[i * n + a]) * s.coeffs[i * n + b]) % p);
            }
        }
    }
    return s;
}

struct Hit {
    std::size_t z, x, y;
};

std::vector<Hit> scan(const Space& s, std::size_t z_begin, std::size_t z_end) {
    std::vector<Hit> hits;
    const std::size_t len = s.sq_len;
    for (std::size_t z = z_begin; z < z_end; ++z) {
        const std::uint32_t* zz = &s.squares[z * len];
        for (std::size_t x = 0; x < s.count; ++x) {
            const std::uint32_t* xx = &s.squares[x * len];
            for (std::size_t y = 0; y < s.count; ++y) {
                if (x == 0 && y == 0 && z == 0) continue;
                const std::uint32_t* yy = &s.squares[y * len];
                std::size_t j = 0;
                while (j < len && (xx[j] + yy[j]) % s.p == zz[j]) ++j;
                if (j != len) continue;
                if (residue_gcd(residue_gcd(s.poly(x), s.poly(y), s.p), s.poly(z), s.p).size() == 1) {
                    hits.push_back({z, x, y});
                }
            }
        }
    }
    return hits;
}

Poly to_poly(const Space& s, std::size_t i, FieldSpec spec) {
    std::vector<FieldElement> cs;
    for (std::size_t j = 0; j < s.n; ++j) cs.push_back(FieldElement::from_int(spec, s.coeffs[i * s.n + j]));
    return Poly(spec, std::move(cs));
}

}  // namespace

std::uint64_t search_space_size(const SearchBounds& b) {
    if (!b.field.is_prime_field() || b.max_deg < 0) return 0;
    std::uint64_t size = 1;
    const int exponent = 3 * (b.max_deg + 1);
    for (int i = 0; i < exponent; ++i) {
        if (size > UINT64_MAX / b.field.modulus()) return UINT64_MAX;
        size *= b.field.modulus();
    }
    return size;
}

std::vector<Triple> brute_force_triples(const SearchBounds& b, unsigned jobs) {
    if (!b.field.is_prime_field()) throw Error(Errc::InvalidField, "brute force needs a prime field");
    if (b.max_deg < 0) throw Error(Errc::InvalidField, "max_deg must be >= 0");
    const std::uint64_t size = search_space_size(b);
    if (size > max_search_candidates) {
        throw Error(Errc::SearchTooLarge, std::to_string(size) + " candidates exceed the cap of " +
                                              std::to_string(max_search_candidates));
    }
    const Space space = build_space(static_cast<std::uint32_t>(b.field.modulus()),
                                    static_cast<std::size_t>(b.max_deg) + 1);

    // z's index is most significant in its leading coefficients, so contiguous
    // index ranges are blocks of z's leading coefficients.
    jobs = std::max(1u, jobs);
    const std::size_t chunk = (space.count + jobs - 1) / jobs;
    std::vector<std::future<std::vector<Hit>>> parts;
    for (std::size_t begin = 0; begin < space.count; begin += chunk) {
        const std::size_t end = std::min(space.count, begin + chunk);
        parts.push_back(std::async(std::launch::async, [&space, begin, end] { return scan(space, begin, end); }));
    }
    std::vector<Triple> out;
    for (auto& part : parts) {
        for (const Hit& h : part.get()) {
            out.emplace_back(to_poly(space, h.x, b.field), to_poly(space, h.y, b.field), to_poly(space, h.z, b.field));
        }
    }
    return out;
}

CensusReport cross_validate(const SearchBounds& b, unsigned jobs) {
    CensusReport report{b, search_space_size(b), {}, {}};
    const std::vector<Triple> triples = brute_force_triples(b, jobs);

    EnumerationOptions options;
    options.max_height = b.max_deg;
    options.jobs = jobs;
    const std::vector<TreeNode> tree = enumerate_tree(b.field, options);

    std::set<std::string> tree_set;
    for (const auto& node : tree) {
        ++report.counts_by_height[node.height].tree;
        if (!tree_set.insert(render(node.triple)).second) {
            report.violations.push_back("tree emits " + render(node.triple) + " twice");
        }
        if (!is_spt(node.triple)) report.violations.push_back("tree node " + render(node.triple) + " is not an SPT");
    }

    jobs = std::max(1u, jobs);
    struct Partial {
        std::vector<std::string> violations;
        std::vector<std::string> spts;
    };
    auto check = [&](unsigned slot) {
        Partial part;
        const Triple axis = axis_triple(b.field);
        for (std::size_t i = slot; i < triples.size(); i += jobs) {
            const Triple& q = triples[i];
            const std::string text = render(q);
            try {
                const Classification cls = classify(q);
                if (cls == Classification::NotPythagorean || cls == Classification::NotPrimitive) {
                    part.violations.push_back("oracle triple " + text + " classified " +
                                              std::string(classification_name(cls)));
                    continue;
                }
                if (cls == Classification::SPT && !q.x().is_zero()) {
                    part.spts.push_back(text);
                    const BerggrenWord w = decompose(q);
                    const Triple back = reconstruct(w, b.field);
                    if (!(back == q) || !(decompose(back) == w)) {
                        part.violations.push_back("round trip fails for " + text);
                    }
                }
                const Mat3 a = orbit_map(q);
                if (!is_orthogonal(a) || !(mat_apply(a, axis) == q) ||
                    !(mat_apply(orthogonal_inverse(a), q) == axis)) {
                    part.violations.push_back("orbit map fails for " + text);
                }
            } catch (const Error& e) {
                part.violations.push_back(text + ": " + e.what());
            }
        }
        return part;
    };
    std::vector<std::future<Partial>> parts;
    for (unsigned slot = 0; slot < jobs; ++slot) parts.push_back(std::async(std::launch::async, check, slot));

    std::set<std::string> oracle_set;
    for (auto& fut : parts) {
        Partial part = fut.get();
        report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
        oracle_set.insert(part.spts.begin(), part.spts.end());
    }
    for (const auto& q : triples) {
        auto& counts = report.counts_by_height[height(q).value()];
        ++counts.primitive;
        if (!q.x().is_zero() && oracle_set.count(render(q)) != 0) ++counts.spt;
    }

    for (const auto& s : oracle_set) {
        if (tree_set.count(s) == 0) report.violations.push_back("oracle SPT " + s + " missing from tree");
    }
    for (const auto& s : tree_set) {
        if (oracle_set.count(s) == 0) report.violations.push_back("tree SPT " + s + " missing from oracle");
    }
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

}  // namespace pyth

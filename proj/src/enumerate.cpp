#include <algorithm>
#include <future>
#include <numeric>

#include "pyth/berggren.hpp"

namespace pyth {

namespace {

std::vector<FieldElement> coefficient_set(FieldSpec spec, const EnumerationOptions& options) {
    std::vector<FieldElement> set;
    if (options.coefficients) {
        set = *options.coefficients;
        for (const auto& c : set) {
            if (!(c.spec() == spec)) throw Error(Errc::FieldMismatch, "coefficient bound from another field");
        }
    } else if (spec.is_prime_field()) {
        for (std::uint64_t r = 0; r < spec.modulus(); ++r) {
            set.push_back(FieldElement::from_int(spec, static_cast<long>(r)));
        }
    } else {
        throw Error(Errc::UnboundedEnumeration, "enumeration over Q needs a finite coefficient set");
    }
    std::sort(set.begin(), set.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

struct Grower {
    int max_height;
    // extensions[d] holds every allowed f of degree d.
    const std::vector<std::vector<Poly>>& extensions;

    // Appends the subtree rooted at `node` (whose index is out.size() on entry).
    void grow(TreeNode node, std::vector<TreeNode>& out) const {
        const std::size_t index = out.size();
        const int h = node.height;
        const Triple triple = node.triple;
        const BerggrenWord word = node.word;
        out.push_back(std::move(node));
        for (int d = 1; h + 2 * d <= max_height; ++d) {
            for (const auto& f : extensions[static_cast<std::size_t>(d)]) {
                BerggrenWord child_word = word;
                child_word.word.insert(child_word.word.begin(), f);
                Triple child = mat_apply(generator(MfGen{f}, f.spec()), triple);
                grow(TreeNode{std::move(child), std::move(child_word), h + 2 * d, index}, out);
            }
        }
    }
};

}  // namespace

std::vector<Poly> polynomials_of_degree(FieldSpec spec, const std::vector<FieldElement>& coefficients, int deg) {
    std::vector<FieldElement> leads;
    for (const auto& c : coefficients) {
        if (!c.is_zero()) leads.push_back(c);
    }
    std::vector<Poly> out;
    if (deg < 0 || leads.empty() || coefficients.empty()) return out;

    // Odometer over the lower coefficients, leading digit outermost.
    std::vector<std::size_t> digits(static_cast<std::size_t>(deg), 0);
    for (const auto& lead : leads) {
        std::fill(digits.begin(), digits.end(), 0);
        while (true) {
            std::vector<FieldElement> cs;
            cs.reserve(digits.size() + 1);
            for (std::size_t i : digits) cs.push_back(coefficients[i]);
            cs.push_back(lead);
            out.emplace_back(spec, std::move(cs));
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == coefficients.size()) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    }
    return out;
}

std::vector<TreeNode> enumerate_tree(FieldSpec spec, const EnumerationOptions& options) {
    const std::vector<FieldElement> coeffs = coefficient_set(spec, options);
    if (options.max_height < 2) return {};

    const int max_deg = options.max_height / 2;
    std::vector<std::vector<Poly>> by_degree(static_cast<std::size_t>(max_deg) + 1);
    std::vector<Poly> bases;
    for (int d = 1; d <= max_deg; ++d) {
        by_degree[static_cast<std::size_t>(d)] = polynomials_of_degree(spec, coeffs, d);
        bases.insert(bases.end(), by_degree[static_cast<std::size_t>(d)].begin(),
                     by_degree[static_cast<std::size_t>(d)].end());
    }
    std::vector<FieldElement> scalars;
    for (const auto& c : coeffs) {
        if (!c.is_zero()) scalars.push_back(c);
    }

    const Grower grower{options.max_height, by_degree};
    const unsigned jobs = std::max(1u, options.jobs);
    auto worker = [&](unsigned slot) {
        std::vector<TreeNode> local;
        for (std::size_t i = slot; i < bases.size(); i += jobs) {
            const Poly& base = bases[i];
            std::vector<TreeNode> unit;
            grower.grow(TreeNode{make_S(base).triple, BerggrenWord{FieldElement::one(spec), {}, base},
                                 2 * base.degree().value(), std::nullopt},
                        unit);
            for (const auto& c : scalars) {
                const std::size_t offset = local.size();
                for (const auto& node : unit) {
                    BerggrenWord w = node.word;
                    w.c = c;
                    std::optional<std::size_t> parent;
                    if (node.parent) parent = *node.parent + offset;
                    local.push_back(TreeNode{scale(node.triple, c), std::move(w), node.height, parent});
                }
            }
        }
        return local;
    };

    std::vector<std::future<std::vector<TreeNode>>> parts;
    for (unsigned slot = 0; slot < jobs; ++slot) parts.push_back(std::async(std::launch::async, worker, slot));

    std::vector<TreeNode> merged;
    for (auto& part : parts) {
        std::vector<TreeNode> chunk = part.get();
        const std::size_t offset = merged.size();
        for (auto& node : chunk) {
            if (node.parent) *node.parent += offset;
            merged.push_back(std::move(node));
        }
    }

    // Canonical order: height, then rendered triple.
    std::vector<std::string> keys;
    keys.reserve(merged.size());
    for (const auto& node : merged) keys.push_back(render(node.triple));
    std::vector<std::size_t> order(merged.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (merged[a].height != merged[b].height) return merged[a].height < merged[b].height;
        return keys[a] < keys[b];
    });
    std::vector<std::size_t> new_index(merged.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;

    std::vector<TreeNode> sorted;
    sorted.reserve(merged.size());
    for (std::size_t i : order) {
        TreeNode node = std::move(merged[i]);
        if (node.parent) node.parent = new_index[*node.parent];
        sorted.push_back(std::move(node));
    }
    return sorted;
}

}  // namespace pyth

#include "gramlab/derive.hpp"

#include <unordered_map>
#include <unordered_set>

namespace gramlab {

// ── candidate pool ──────────────────────────────────────────────────────────

namespace {

void collect_subterms(const FeatureTerm& t, std::vector<FeatureTerm>& out) {
    out.push_back(t);
    if (!t.is_atom()) {
        collect_subterms(t.left(), out);
        collect_subterms(t.right(), out);
    }
}

void collect_leaf_terms(const Category& c, std::vector<FeatureTerm>& out) {
    if (c.is_atomic()) {
        collect_subterms(c.term(), out);
    } else {
        collect_leaf_terms(c.result(), out);
        collect_leaf_terms(c.argument(), out);
    }
}

void collect_subcategories(const Category& c, std::vector<Category>& out) {
    out.push_back(c);
    if (!c.is_atomic()) {
        collect_subcategories(c.result(), out);
        collect_subcategories(c.argument(), out);
    }
}

// Equivalence-deduplicated term set keeping the smallest representative of
// each class, position-stable.
struct TermSet {
    std::vector<FeatureTerm> terms;

    void add(const FeatureTerm& t) {
        for (auto& existing : terms) {
            if (equivalent(existing, t)) {
                if (t.node_count() < existing.node_count()) existing = t;
                return;
            }
        }
        terms.push_back(t);
    }
};

Category rebuild(Category::Kind kind, Category result, Category argument) {
    return kind == Category::Kind::Over ? Category::over(std::move(result), std::move(argument))
                                        : Category::under(std::move(result), std::move(argument));
}

// All variants of `c` with exactly one atomic argument position replaced by a
// pool term.
void single_argument_replacements(const Category& c, const std::vector<FeatureTerm>& terms,
                                  std::vector<Category>& out) {
    if (c.is_atomic()) return;
    Category res = c.result();
    Category arg = c.argument();
    if (arg.is_atomic()) {
        for (const auto& t : terms) out.push_back(rebuild(c.kind(), res, Category::atomic(t)));
    } else {
        std::vector<Category> inner;
        single_argument_replacements(arg, terms, inner);
        for (auto& a : inner) out.push_back(rebuild(c.kind(), res, std::move(a)));
    }
    std::vector<Category> inner;
    single_argument_replacements(res, terms, inner);
    for (auto& r : inner) out.push_back(rebuild(c.kind(), std::move(r), arg));
}

}  // namespace

bool CandidatePool::contains_term_equivalent(const FeatureTerm& t) const {
    for (const auto& existing : terms) {
        if (equivalent(existing, t)) return true;
    }
    return false;
}

bool CandidatePool::contains_category(const Category& c) const {
    for (const auto& existing : categories) {
        if (existing == c) return true;
    }
    return false;
}

CandidatePool build_pool(std::span<const Category> lexical_categories) {
    CandidatePool pool;

    TermSet ts;
    std::vector<FeatureTerm> raw;
    for (const auto& c : lexical_categories) collect_leaf_terms(c, raw);
    for (const auto& t : raw) ts.add(t);

    const std::vector<FeatureTerm> seeds = ts.terms;  // closure runs over the seed set only
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = i; j < seeds.size(); ++j) {
            ts.add(FeatureTerm::conj(seeds[i], seeds[j]));
            ts.add(FeatureTerm::disj(seeds[i], seeds[j]));
        }
    }
    pool.terms = std::move(ts.terms);

    std::unordered_set<std::string> seen;
    auto add_category = [&](const Category& c) {
        if (seen.insert(c.to_string()).second) pool.categories.push_back(c);
    };
    std::vector<Category> subcats;
    for (const auto& c : lexical_categories) collect_subcategories(c, subcats);
    for (const auto& c : subcats) add_category(c);
    for (const auto& c : subcats) {
        std::vector<Category> variants;
        single_argument_replacements(c, pool.terms, variants);
        for (const auto& v : variants) add_category(v);
    }
    return pool;
}

// ── proof search ────────────────────────────────────────────────────────────

namespace {

class Searcher {
public:
    Searcher(const CandidatePool& pool, DeriveStats* stats, const DeriveLimits& limits)
        : stats_(stats), fuel_(limits.fuel) {
        std::unordered_set<std::string> seen;
        auto add = [&](Category c) {
            if (seen.insert(c.to_string()).second) candidates_.push_back(std::move(c));
        };
        for (const auto& t : pool.terms) add(Category::atomic(t));
        for (const auto& c : pool.categories) add(c);
    }

    std::optional<ProofTree> prove(const Sequent& sequent) {
        std::string key = sequent_key(sequent);
        if (failed_.count(key)) {
            if (stats_) ++stats_->memo_hits;
            return std::nullopt;
        }
        if (auto it = proved_.find(key); it != proved_.end()) {
            if (stats_) ++stats_->memo_hits;
            return it->second;
        }
        if (fuel_ == 0) throw FuelExhausted();
        --fuel_;
        if (stats_) ++stats_->expansions;
        std::optional<ProofTree> result = search(sequent);
        if (result) {
            proved_.emplace(std::move(key), *result);
        } else {
            failed_.insert(std::move(key));
        }
        return result;
    }

private:
    std::string sequent_key(const Sequent& sequent) {
        std::string key;
        for (const auto& item : sequent.antecedent) {
            if (is_conj(item)) {
                key += '<';
                key += std::get<Conj>(item).marker;
                key += '>';
            } else {
                key += category_text(as_category(item));
            }
            key += ',';
        }
        key += '>';
        key += category_text(sequent.succedent);
        return key;
    }

    // Keyed by node address: sound because the search never constructs new
    // category nodes, it only reuses subtrees of the root sequent and pool,
    // all of which outlive the searcher.
    const std::string& category_text(const Category& c) {
        auto [it, inserted] = print_cache_.try_emplace(c.identity());
        if (inserted) it->second = c.to_string();
        return it->second;
    }
    static std::vector<SequentItem> slice(const std::vector<SequentItem>& items, std::size_t lo,
                                          std::size_t hi) {
        return std::vector<SequentItem>(items.begin() + lo, items.begin() + hi);
    }

    // Antecedent with [lo, hi) replaced by a single category.
    static std::vector<SequentItem> splice(const std::vector<SequentItem>& items, std::size_t lo,
                                           std::size_t hi, Category replacement) {
        std::vector<SequentItem> out(items.begin(), items.begin() + lo);
        out.emplace_back(std::move(replacement));
        out.insert(out.end(), items.begin() + hi, items.end());
        return out;
    }

    std::optional<ProofTree> search(const Sequent& sequent) {
        const auto& ante = sequent.antecedent;
        const Category& goal = sequent.succedent;
        const std::size_t n = ante.size();

        // Right rules are invertible here (the axiom only matches atomic
        // goals), so a slash goal is decomposed deterministically.
        if (goal.kind() == Category::Kind::Over) {
            std::vector<SequentItem> items = ante;
            items.emplace_back(goal.argument());
            if (auto sub = prove(Sequent{std::move(items), goal.result()})) {
                return ProofTree{sequent, Rule::OverRight, {std::move(*sub)}, std::nullopt};
            }
            return std::nullopt;
        }
        if (goal.kind() == Category::Kind::Under) {
            std::vector<SequentItem> items;
            items.reserve(n + 1);
            items.emplace_back(goal.argument());
            items.insert(items.end(), ante.begin(), ante.end());
            if (auto sub = prove(Sequent{std::move(items), goal.result()})) {
                return ProofTree{sequent, Rule::UnderRight, {std::move(*sub)}, std::nullopt};
            }
            return std::nullopt;
        }

        if (n == 1 && !is_conj(ante[0])) {
            const Category& c = as_category(ante[0]);
            if (c.is_atomic() && cached_entails(c.term(), goal.term())) {
                return ProofTree{sequent, Rule::Axiom, {}, std::nullopt};
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            if (is_conj(ante[i])) continue;
            const Category& c = as_category(ante[i]);
            if (c.kind() == Category::Kind::Over) {
                // argument material is a nonempty span immediately to the right
                for (std::size_t j = i + 1; j < n; ++j) {
                    auto arg = prove(Sequent{slice(ante, i + 1, j + 1), c.argument()});
                    if (!arg) continue;
                    auto rest = prove(Sequent{splice(ante, i, j + 1, c.result()), goal});
                    if (!rest) continue;
                    return ProofTree{sequent, Rule::OverLeft,
                                     {std::move(*arg), std::move(*rest)}, std::nullopt};
                }
            } else if (c.kind() == Category::Kind::Under) {
                // argument material is a nonempty span immediately to the left
                for (std::size_t j = 0; j < i; ++j) {
                    auto arg = prove(Sequent{slice(ante, j, i), c.argument()});
                    if (!arg) continue;
                    auto rest = prove(Sequent{splice(ante, j, i + 1, c.result()), goal});
                    if (!rest) continue;
                    return ProofTree{sequent, Rule::UnderLeft,
                                     {std::move(*arg), std::move(*rest)}, std::nullopt};
                }
            }
        }

        for (std::size_t ci = 0; ci < n; ++ci) {
            if (!is_conj(ante[ci])) continue;
            for (std::size_t a = 0; a < ci; ++a) {
                for (const Category& target : candidates_) {
                    auto left = prove(Sequent{slice(ante, a, ci), target});
                    if (!left) continue;
                    for (std::size_t b = ci + 1; b < n; ++b) {
                        auto right = prove(Sequent{slice(ante, ci + 1, b + 1), target});
                        if (!right) continue;
                        std::vector<SequentItem> rest(ante.begin(), ante.begin() + a);
                        rest.emplace_back(target);
                        rest.insert(rest.end(), ante.begin() + b + 1, ante.end());
                        auto cont = prove(Sequent{std::move(rest), goal});
                        if (!cont) continue;
                        return ProofTree{sequent,
                                         Rule::Coord,
                                         {std::move(*left), std::move(*right), std::move(*cont)},
                                         target};
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Axiom checks hit the same term pairs over and over; cache them.
    bool cached_entails(const FeatureTerm& phi, const FeatureTerm& psi) {
        std::string key = phi.to_string();
        key += '\x01';
        key += psi.to_string();
        auto it = entail_cache_.find(key);
        if (it != entail_cache_.end()) return it->second;
        bool result = entails(phi, psi);
        entail_cache_.emplace(std::move(key), result);
        return result;
    }

    std::vector<Category> candidates_;
    std::unordered_set<std::string> failed_;
    std::unordered_map<std::string, ProofTree> proved_;
    std::unordered_map<const void*, std::string> print_cache_;
    std::unordered_map<std::string, bool> entail_cache_;
    DeriveStats* stats_;
    std::uint64_t fuel_;
};

}  // namespace

std::optional<ProofTree> derive(std::span<const SequentItem> antecedent, const Category& goal,
                                const CandidatePool& pool, DeriveStats* stats,
                                const DeriveLimits& limits) {
    if (antecedent.empty()) throw std::invalid_argument("derive: empty antecedent");
    Searcher searcher(pool, stats, limits);
    Sequent root{std::vector<SequentItem>(antecedent.begin(), antecedent.end()), goal};
    return searcher.prove(root);
}

}  // namespace gramlab

#include "gramlab/render.hpp"

#include <cstdint>
#include <stdexcept>

#include "gramlab/proof_check.hpp"

namespace gramlab {

namespace {

// ── display-width helpers (UTF-8 aware, every code point counts as 1) ──────

std::size_t dlen(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

std::string spaces(std::size_t n) { return std::string(n, ' '); }

std::string pad_to(std::string s, std::size_t width) {
    std::size_t have = dlen(s);
    if (have < width) s += spaces(width - have);
    return s;
}

std::string centered(const std::string& s, std::size_t width) {
    std::size_t have = dlen(s);
    std::size_t lead = have < width ? (width - have) / 2 : 0;
    return pad_to(spaces(lead) + s, width);
}

// ── split recovery ──────────────────────────────────────────────────────────
// The renderer only sees checked proofs, so each of these scans succeeds.

struct LeftSplit {
    std::size_t position;  // index of the active formula in the conclusion
    std::size_t gamma;     // length of the argument span
};

LeftSplit over_left_split(const ProofTree& p) {
    const auto& ante = p.conclusion.antecedent;
    const auto& arg = p.premises[0].conclusion;
    const auto& rest = p.premises[1].conclusion;
    const std::size_t g = arg.antecedent.size();
    for (std::size_t k = 0; k < rest.antecedent.size() && k + 1 + g <= ante.size(); ++k) {
        if (!is_conj(ante[k])) {
            const Category& fn = as_category(ante[k]);
            if (fn.kind() == Category::Kind::Over && !is_conj(rest.antecedent[k]) &&
                fn.result() == as_category(rest.antecedent[k]) &&
                fn.argument() == arg.succedent) {
                bool ok = true;
                for (std::size_t m = 0; m < g && ok; ++m)
                    ok = items_equal(ante[k + 1 + m], arg.antecedent[m]);
                for (std::size_t m = k + 1; m < rest.antecedent.size() && ok; ++m)
                    ok = items_equal(ante[m + g], rest.antecedent[m]);
                if (ok) return {k, g};
            }
        }
        if (!items_equal(ante[k], rest.antecedent[k])) break;
    }
    throw std::logic_error("over_left_split: malformed proof");
}

LeftSplit under_left_split(const ProofTree& p) {
    const auto& ante = p.conclusion.antecedent;
    const auto& arg = p.premises[0].conclusion;
    const auto& rest = p.premises[1].conclusion;
    const std::size_t g = arg.antecedent.size();
    for (std::size_t k = 0; k < rest.antecedent.size(); ++k) {
        const std::size_t fn_at = k + g;
        if (fn_at < ante.size() && !is_conj(ante[fn_at]) && !is_conj(rest.antecedent[k])) {
            const Category& fn = as_category(ante[fn_at]);
            if (fn.kind() == Category::Kind::Under &&
                fn.result() == as_category(rest.antecedent[k]) &&
                fn.argument() == arg.succedent) {
                bool ok = true;
                for (std::size_t m = 0; m < g && ok; ++m)
                    ok = items_equal(ante[k + m], arg.antecedent[m]);
                for (std::size_t m = k + 1; m < rest.antecedent.size() && ok; ++m)
                    ok = items_equal(ante[m + g], rest.antecedent[m]);
                if (ok) return {fn_at, g};
            }
        }
        if (!items_equal(ante[k], rest.antecedent[k])) break;
    }
    throw std::logic_error("under_left_split: malformed proof");
}

struct CoordSplit {
    std::size_t conj_at;
    std::size_t d1, d2;
};

CoordSplit coord_split(const ProofTree& p) {
    const auto& ante = p.conclusion.antecedent;
    const std::size_t d1 = p.premises[0].conclusion.antecedent.size();
    const std::size_t d2 = p.premises[1].conclusion.antecedent.size();
    for (std::size_t ci = 0; ci < ante.size(); ++ci) {
        if (!is_conj(ante[ci]) || ci < d1 || ci + 1 + d2 > ante.size()) continue;
        bool ok = true;
        for (std::size_t m = 0; m < d1 && ok; ++m)
            ok = items_equal(ante[ci - d1 + m], p.premises[0].conclusion.antecedent[m]);
        for (std::size_t m = 0; m < d2 && ok; ++m)
            ok = items_equal(ante[ci + 1 + m], p.premises[1].conclusion.antecedent[m]);
        if (ok) return {ci, d1, d2};
    }
    throw std::logic_error("coord_split: malformed proof");
}

// ── natural-deduction tree ──────────────────────────────────────────────────

struct NdNode {
    std::string text;    // category display (or the conjunction word itself)
    std::string word;    // lexical token shown above the category, may be empty
    std::string label;   // rule label on the inference bar
    std::vector<NdNode> premises;
};

struct NdState {
    int hyp_counter = 0;
};

NdNode translate(const ProofTree& p, std::vector<NdNode> ctx, NdState& state) {
    switch (p.rule) {
        case Rule::Axiom: {
            const Category& from = as_category(p.conclusion.antecedent[0]);
            const Category& to = p.conclusion.succedent;
            if (from.term() == to.term()) return std::move(ctx[0]);
            NdNode weakened;
            weakened.text = to.to_string();
            weakened.label = "P";
            weakened.premises.push_back(std::move(ctx[0]));
            return weakened;
        }
        case Rule::OverRight: {
            int n = ++state.hyp_counter;
            NdNode hyp;
            hyp.text = "[" + p.conclusion.succedent.argument().to_string() + "]^" +
                       std::to_string(n);
            ctx.push_back(std::move(hyp));
            NdNode body = translate(p.premises[0], std::move(ctx), state);
            NdNode out;
            out.text = p.conclusion.succedent.to_string();
            out.label = "/i^" + std::to_string(n);
            out.premises.push_back(std::move(body));
            return out;
        }
        case Rule::UnderRight: {
            int n = ++state.hyp_counter;
            NdNode hyp;
            hyp.text = "[" + p.conclusion.succedent.argument().to_string() + "]^" +
                       std::to_string(n);
            std::vector<NdNode> extended;
            extended.reserve(ctx.size() + 1);
            extended.push_back(std::move(hyp));
            for (auto& c : ctx) extended.push_back(std::move(c));
            NdNode body = translate(p.premises[0], std::move(extended), state);
            NdNode out;
            out.text = p.conclusion.succedent.to_string();
            out.label = "\\i^" + std::to_string(n);
            out.premises.push_back(std::move(body));
            return out;
        }
        case Rule::OverLeft: {
            auto [k, g] = over_left_split(p);
            std::vector<NdNode> arg_ctx(std::make_move_iterator(ctx.begin() + k + 1),
                                        std::make_move_iterator(ctx.begin() + k + 1 + g));
            NdNode arg = translate(p.premises[0], std::move(arg_ctx), state);
            NdNode app;
            app.text = as_category(p.conclusion.antecedent[k]).result().to_string();
            app.label = "/e";
            app.premises.push_back(std::move(ctx[k]));
            app.premises.push_back(std::move(arg));
            std::vector<NdNode> next(std::make_move_iterator(ctx.begin()),
                                     std::make_move_iterator(ctx.begin() + k));
            next.push_back(std::move(app));
            for (std::size_t m = k + 1 + g; m < ctx.size(); ++m) next.push_back(std::move(ctx[m]));
            return translate(p.premises[1], std::move(next), state);
        }
        case Rule::UnderLeft: {
            auto [fn_at, g] = under_left_split(p);
            const std::size_t k = fn_at - g;
            std::vector<NdNode> arg_ctx(std::make_move_iterator(ctx.begin() + k),
                                        std::make_move_iterator(ctx.begin() + k + g));
            NdNode arg = translate(p.premises[0], std::move(arg_ctx), state);
            NdNode app;
            app.text = as_category(p.conclusion.antecedent[fn_at]).result().to_string();
            app.label = "\\e";
            app.premises.push_back(std::move(arg));
            app.premises.push_back(std::move(ctx[fn_at]));
            std::vector<NdNode> next(std::make_move_iterator(ctx.begin()),
                                     std::make_move_iterator(ctx.begin() + k));
            next.push_back(std::move(app));
            for (std::size_t m = fn_at + 1; m < ctx.size(); ++m) next.push_back(std::move(ctx[m]));
            return translate(p.premises[1], std::move(next), state);
        }
        case Rule::Coord: {
            auto [ci, d1, d2] = coord_split(p);
            std::vector<NdNode> left_ctx(std::make_move_iterator(ctx.begin() + ci - d1),
                                         std::make_move_iterator(ctx.begin() + ci));
            NdNode left = translate(p.premises[0], std::move(left_ctx), state);
            std::vector<NdNode> right_ctx(std::make_move_iterator(ctx.begin() + ci + 1),
                                          std::make_move_iterator(ctx.begin() + ci + 1 + d2));
            NdNode right = translate(p.premises[1], std::move(right_ctx), state);
            NdNode co;
            co.text = p.coord_target->to_string();
            co.label = "co";
            co.premises.push_back(std::move(left));
            co.premises.push_back(std::move(ctx[ci]));
            co.premises.push_back(std::move(right));
            std::vector<NdNode> next(std::make_move_iterator(ctx.begin()),
                                     std::make_move_iterator(ctx.begin() + ci - d1));
            next.push_back(std::move(co));
            for (std::size_t m = ci + 1 + d2; m < ctx.size(); ++m) next.push_back(std::move(ctx[m]));
            return translate(p.premises[2], std::move(next), state);
        }
    }
    throw std::logic_error("translate: unknown rule");
}

// ── 2D layout ───────────────────────────────────────────────────────────────

struct Box {
    std::vector<std::string> lines;  // equal display width
    std::size_t width = 0;
    std::size_t mark_lo = 0, mark_hi = 0;  // conclusion span on the bottom line
};

Box leaf_box(const NdNode& n) {
    Box b;
    if (n.word.empty()) {
        b.width = dlen(n.text);
        b.lines.push_back(n.text);
        b.mark_lo = 0;
        b.mark_hi = b.width;
    } else {
        b.width = std::max(dlen(n.word), dlen(n.text));
        b.lines.push_back(centered(n.word, b.width));
        b.lines.push_back(centered(n.text, b.width));
        std::size_t tl = dlen(n.text);
        b.mark_lo = (b.width - tl) / 2;
        b.mark_hi = b.mark_lo + tl;
    }
    return b;
}

Box layout(const NdNode& n) {
    if (n.premises.empty()) return leaf_box(n);

    std::vector<Box> kids;
    kids.reserve(n.premises.size());
    std::size_t height = 0;
    for (const auto& k : n.premises) {
        kids.push_back(layout(k));
        height = std::max(height, kids.back().lines.size());
    }

    constexpr std::size_t kGap = 3;
    std::vector<std::string> joined(height);
    std::size_t offset = 0;
    std::size_t span_lo = 0, span_hi = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        const Box& k = kids[i];
        std::size_t top_pad = height - k.lines.size();
        for (std::size_t r = 0; r < height; ++r) {
            std::string piece =
                r < top_pad ? spaces(k.width) : pad_to(k.lines[r - top_pad], k.width);
            joined[r] = pad_to(std::move(joined[r]), offset) + piece;
        }
        if (i == 0) span_lo = offset + k.mark_lo;
        span_hi = offset + k.mark_hi;
        offset += k.width + kGap;
    }
    std::size_t joined_width = offset - kGap;

    std::size_t concl_len = dlen(n.text);
    std::size_t bar_w = std::max(span_hi - span_lo, concl_len);
    std::int64_t bar_lo =
        static_cast<std::int64_t>(span_lo + span_hi) / 2 - static_cast<std::int64_t>(bar_w) / 2;
    if (bar_lo < 0) {
        std::size_t shift = static_cast<std::size_t>(-bar_lo);
        for (auto& line : joined) line = spaces(shift) + line;
        joined_width += shift;
        bar_lo = 0;
    }
    std::size_t blo = static_cast<std::size_t>(bar_lo);

    std::string bar = spaces(blo) + std::string(bar_w, '-');
    if (!n.label.empty()) bar += " " + n.label;
    std::size_t c_lo = blo + (bar_w - concl_len) / 2;
    std::string concl = spaces(c_lo) + n.text;

    Box out;
    out.width = std::max({joined_width, dlen(bar), dlen(concl)});
    for (auto& line : joined) out.lines.push_back(pad_to(std::move(line), out.width));
    out.lines.push_back(pad_to(std::move(bar), out.width));
    out.lines.push_back(pad_to(std::move(concl), out.width));
    out.mark_lo = c_lo;
    out.mark_hi = c_lo + concl_len;
    return out;
}

// ── sequent-style rendering ─────────────────────────────────────────────────

void render_sequent_tree(const ProofTree& p, std::size_t depth, std::string& out) {
    out += spaces(depth * 2);
    out += '[';
    out += rule_name(p.rule);
    out += "] ";
    out += p.conclusion.to_string();
    if (p.coord_target) out += "   (target: " + p.coord_target->to_string() + ")";
    out += '\n';
    for (const auto& premise : p.premises) render_sequent_tree(premise, depth + 1, out);
}

}  // namespace

std::string render_proof(const ProofTree& proof, RenderStyle style,
                         std::span<const std::string> words) {
    if (!check_proof(proof)) {
        throw std::invalid_argument("render_proof: proof fails check_proof");
    }
    if (!words.empty() && words.size() != proof.conclusion.antecedent.size()) {
        throw std::invalid_argument("render_proof: words do not align with the antecedent");
    }

    if (style == RenderStyle::Sequent) {
        std::string out;
        render_sequent_tree(proof, 0, out);
        return out;
    }

    std::vector<NdNode> ctx;
    const auto& ante = proof.conclusion.antecedent;
    for (std::size_t i = 0; i < ante.size(); ++i) {
        NdNode leaf;
        if (is_conj(ante[i])) {
            leaf.text = words.empty() ? std::get<Conj>(ante[i]).marker : words[i];
        } else {
            leaf.text = as_category(ante[i]).to_string();
            if (!words.empty()) leaf.word = words[i];
        }
        ctx.push_back(std::move(leaf));
    }
    NdState state;
    NdNode root = translate(proof, std::move(ctx), state);
    Box box = layout(root);
    std::string out;
    for (auto& line : box.lines) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::vector<std::string> nd_rule_labels(const ProofTree& proof) {
    std::vector<std::string> out;
    struct Walk {
        static void go(const ProofTree& p, std::vector<std::string>& labels) {
            switch (p.rule) {
                case Rule::Axiom: {
                    const Category& from = as_category(p.conclusion.antecedent[0]);
                    if (!(from.term() == p.conclusion.succedent.term())) labels.push_back("P");
                    break;
                }
                case Rule::OverLeft: labels.push_back("/e"); break;
                case Rule::UnderLeft: labels.push_back("\\e"); break;
                case Rule::OverRight: labels.push_back("/i"); break;
                case Rule::UnderRight: labels.push_back("\\i"); break;
                case Rule::Coord: labels.push_back("co"); break;
            }
            for (const auto& premise : p.premises) go(premise, labels);
        }
    };
    Walk::go(proof, out);
    return out;
}

}  // namespace gramlab

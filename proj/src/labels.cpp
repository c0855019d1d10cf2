#include "leosys/labels.hpp"

#include <algorithm>

namespace leosys {

bool is_starred(Symbol s) { return s == Symbol::ZeroStar || s == Symbol::DStar; }

std::string symbol_text(Symbol s) {
    switch (s) {
        case Symbol::Zero: return "0";
        case Symbol::D: return "d";
        case Symbol::ZeroStar: return "0*";
        case Symbol::DStar: return "d*";
    }
    return "?";
}

BasisLabel::BasisLabel(std::array<Symbol, 4> order) : order_(order) {
    std::array<bool, 4> seen{};
    for (Symbol s : order_) seen[static_cast<std::size_t>(s)] = true;
    if (!(seen[0] && seen[1] && seen[2] && seen[3]))
        throw ParseError("basis label must use each of 0, d, 0*, d* exactly once");
}

namespace {

std::vector<Symbol> scan_symbols(const std::string& text) {
    std::vector<Symbol> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ',' || c == ' ') {
            ++i;
            continue;
        }
        Symbol base;
        if (c == '0')
            base = Symbol::Zero;
        else if (c == 'd')
            base = Symbol::D;
        else
            throw ParseError("bad basis label: " + text);
        ++i;
        if (i < text.size() && text[i] == '*') {
            base = (base == Symbol::Zero) ? Symbol::ZeroStar : Symbol::DStar;
            ++i;
        }
        out.push_back(base);
    }
    return out;
}

}  // namespace

BasisLabel BasisLabel::parse(const std::string& text) {
    auto syms = scan_symbols(text);
    if (syms.size() != 4) throw ParseError("basis label needs exactly four symbols: " + text);
    return BasisLabel({syms[0], syms[1], syms[2], syms[3]});
}

const std::vector<BasisLabel>& BasisLabel::all() {
    static const std::vector<BasisLabel> labels = [] {
        std::array<Symbol, 4> base{Symbol::Zero, Symbol::D, Symbol::ZeroStar, Symbol::DStar};
        std::vector<BasisLabel> out;
        std::sort(base.begin(), base.end());
        do out.emplace_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        return out;
    }();
    return labels;
}

BasisLabel BasisLabel::swapped(int pos) const {
    auto order = order_;
    std::swap(order[static_cast<std::size_t>(pos)], order[static_cast<std::size_t>(pos) + 1]);
    return BasisLabel(order);
}

std::string BasisLabel::to_string() const {
    std::string out;
    for (Symbol s : order_) out += symbol_text(s);
    return out;
}

std::optional<int> adjacency_type(const BasisLabel& g, const BasisLabel& h) {
    for (int pos = 0; pos < 3; ++pos)
        if (g.swapped(pos) == h) return pos + 1;
    return std::nullopt;
}

Walk parse_walk(const std::string& text) {
    Walk w;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!part.empty()) w.vertices.push_back(BasisLabel::parse(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (w.vertices.empty()) throw ParseError("empty walk");
    return w;
}

}  // namespace leosys

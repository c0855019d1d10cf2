#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leosys/field.hpp"

namespace leosys {

/// The four symbols 0, d, 0*, d* indexing eigenspace orderings.
enum class Symbol : std::uint8_t { Zero = 0, D = 1, ZeroStar = 2, DStar = 3 };

bool is_starred(Symbol s);
std::string symbol_text(Symbol s);

/// A linear ordering of {0, d, 0*, d*}: one of the 24 basis labels.
/// Text forms: compact `d*00*d` (star binds to the symbol on its left)
/// and comma-separated `d*,0,0*,d`. The compact form is emitted.
class BasisLabel {
public:
    BasisLabel() = default;
    explicit BasisLabel(std::array<Symbol, 4> order);

    static BasisLabel parse(const std::string& text);
    static const std::vector<BasisLabel>& all();  // 24, in symbol order

    Symbol operator[](int pos) const { return order_[static_cast<std::size_t>(pos)]; }

    /// Swaps positions pos and pos+1 (pos in 0..2): the 1-, 2-, 3-adjacent
    /// neighbour respectively.
    BasisLabel swapped(int pos) const;

    std::string to_string() const;

    bool operator==(const BasisLabel& other) const { return order_ == other.order_; }
    bool operator!=(const BasisLabel& other) const { return !(*this == other); }
    bool operator<(const BasisLabel& other) const { return order_ < other.order_; }

private:
    std::array<Symbol, 4> order_{Symbol::Zero, Symbol::D, Symbol::ZeroStar, Symbol::DStar};
};

/// 1 when h swaps the first two symbols of g, 2 the middle two, 3 the last
/// two; nullopt otherwise (including g == h).
std::optional<int> adjacency_type(const BasisLabel& g, const BasisLabel& h);

/// A walk in the adjacency graph: consecutive labels must be adjacent.
struct Walk {
    std::vector<BasisLabel> vertices;
};

/// Comma-separated label list.
Walk parse_walk(const std::string& text);

}  // namespace leosys

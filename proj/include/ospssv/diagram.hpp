#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ospssv/errors.hpp"

namespace ospssv {

/// A Brauer diagram on m strands: a fixed-point-free involution on the 2m
/// nodes T1..Tm (0..m-1) and B1..Bm (m..2m-1). The involution array is the
/// canonical form.
class BrauerDiagram {
  public:
    explicit BrauerDiagram(int m);

    static BrauerDiagram identity(int m);
    /// Pairs given as node ids; every node must occur exactly once.
    static BrauerDiagram from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);
    /// Parse the "T1-B2 T2-B1" text form.
    static BrauerDiagram parse(int m, const std::string& text);

    int size() const { return m_; }
    int partner(int node) const { return match_[static_cast<std::size_t>(node)]; }

    int top_node(int leg) const { return leg - 1; }       // 1-based leg
    int bottom_node(int leg) const { return m_ + leg - 1; }

    /// Number of horizontal strings in the top row.
    int top_arcs() const;

    /// True when legs k+1..m all carry vertical strings T_j - B_j.
    bool identity_from(int k) const;

    /// Swap the string endpoints attached to the top and bottom nodes of leg a.
    BrauerDiagram partial_transpose(int a) const;

    /// Restrict to the first k legs (requires identity_from(k)).
    BrauerDiagram restrict_to(int k) const;
    /// Embed into B_M by appending vertical strands.
    BrauerDiagram embed_into(int big_m) const;
    /// Embed into B_M with legs relabelled 1..m -> 1+offset..m+offset,
    /// vertical strands elsewhere.
    BrauerDiagram shift_into(int offset, int big_m) const;

    std::string str() const;

    friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.m_ == b.m_ && a.match_ == b.match_;
    }
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        if (a.m_ != b.m_)
            return a.m_ < b.m_;
        return a.match_ < b.match_;
    }

    /// All (2m-1)!! diagrams of size m, in a deterministic order.
    static std::vector<BrauerDiagram> all(int m);

  private:
    int m_;
    std::vector<std::uint8_t> match_;
};

/// Concatenation product xy: y is stacked above x, middle nodes are traced
/// through, and each closed loop removed contributes one power of ω.
std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& x, const BrauerDiagram& y);

} // namespace ospssv

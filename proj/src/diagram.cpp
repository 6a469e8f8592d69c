#include "ospssv/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace ospssv {

BrauerDiagram::BrauerDiagram(int m) : m_(m) {
    if (m < 1 || m > 120)
        throw InvalidArgument("diagram size out of range");
    match_.assign(static_cast<std::size_t>(2 * m), 0);
}

BrauerDiagram BrauerDiagram::identity(int m) {
    BrauerDiagram d(m);
    for (int a = 0; a < m; ++a) {
        d.match_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(m + a);
        d.match_[static_cast<std::size_t>(m + a)] = static_cast<std::uint8_t>(a);
    }
    return d;
}

BrauerDiagram BrauerDiagram::from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
    if (static_cast<int>(pairs.size()) != m)
        throw InvalidArgument("diagram needs exactly m strings");
    BrauerDiagram d(m);
    std::vector<bool> seen(static_cast<std::size_t>(2 * m), false);
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= 2 * m || v >= 2 * m || u == v)
            throw InvalidArgument("bad node pair");
        if (seen[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("node used twice");
        seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(v)] = true;
        d.match_[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(v);
        d.match_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(u);
    }
    return d;
}

namespace {
int parse_node(const std::string& tok, int m) {
    if (tok.size() < 2 || (tok[0] != 'T' && tok[0] != 'B'))
        throw InvalidArgument("bad node token: " + tok);
    int leg = std::stoi(tok.substr(1));
    if (leg < 1 || leg > m)
        throw InvalidArgument("leg out of range: " + tok);
    return tok[0] == 'T' ? leg - 1 : m + leg - 1;
}
} // namespace

BrauerDiagram BrauerDiagram::parse(int m, const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<int, int>> pairs;
    while (is >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw InvalidArgument("bad pair token: " + tok);
        pairs.emplace_back(parse_node(tok.substr(0, dash), m),
                           parse_node(tok.substr(dash + 1), m));
    }
    return from_pairs(m, pairs);
}

int BrauerDiagram::top_arcs() const {
    int r = 0;
    for (int a = 0; a < m_; ++a)
        if (partner(a) < m_ && partner(a) > a)
            ++r;
    return r;
}

bool BrauerDiagram::identity_from(int k) const {
    for (int a = k; a < m_; ++a)
        if (partner(a) != m_ + a)
            return false;
    return true;
}

BrauerDiagram BrauerDiagram::partial_transpose(int a) const {
    if (a < 1 || a > m_)
        throw InvalidArgument("leg out of range");
    int ta = top_node(a), ba = bottom_node(a);
    int p = partner(ta), q = partner(ba);
    if (p == ba)
        return *this; // vertical string maps to itself
    BrauerDiagram d(*this);
    d.match_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(ba);
    d.match_[static_cast<std::size_t>(ba)] = static_cast<std::uint8_t>(p);
    d.match_[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>(ta);
    d.match_[static_cast<std::size_t>(ta)] = static_cast<std::uint8_t>(q);
    return d;
}

BrauerDiagram BrauerDiagram::restrict_to(int k) const {
    if (!identity_from(k))
        throw InvalidArgument("diagram not supported on the first k legs");
    BrauerDiagram d(k);
    auto renumber = [&](int node) { return node < m_ ? node : node - m_ + k; };
    for (int a = 0; a < k; ++a) {
        d.match_[static_cast<std::size_t>(a)] =
            static_cast<std::uint8_t>(renumber(partner(a)));
        d.match_[static_cast<std::size_t>(k + a)] =
            static_cast<std::uint8_t>(renumber(partner(m_ + a)));
    }
    return d;
}

BrauerDiagram BrauerDiagram::embed_into(int big_m) const {
    return shift_into(0, big_m);
}

BrauerDiagram BrauerDiagram::shift_into(int offset, int big_m) const {
    if (offset < 0 || m_ + offset > big_m)
        throw InvalidArgument("embedding target too small");
    BrauerDiagram d = identity(big_m);
    auto renumber = [&](int node) {
        return node < m_ ? node + offset : node - m_ + big_m + offset;
    };
    for (int node = 0; node < 2 * m_; ++node) {
        int u = renumber(node), v = renumber(partner(node));
        d.match_[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(v);
    }
    return d;
}

std::string BrauerDiagram::str() const {
    std::ostringstream os;
    bool first = true;
    auto name = [&](int node) {
        return (node < m_ ? "T" + std::to_string(node + 1)
                          : "B" + std::to_string(node - m_ + 1));
    };
    for (int node = 0; node < 2 * m_; ++node) {
        int p = partner(node);
        if (p < node)
            continue;
        if (!first)
            os << " ";
        os << name(node) << "-" << name(p);
        first = false;
    }
    return os.str();
}

std::vector<BrauerDiagram> BrauerDiagram::all(int m) {
    std::vector<BrauerDiagram> out;
    std::vector<int> match(static_cast<std::size_t>(2 * m), -1);
    auto rec = [&](auto&& self, int done) -> void {
        int u = -1;
        for (int i = 0; i < 2 * m; ++i) {
            if (match[static_cast<std::size_t>(i)] < 0) {
                u = i;
                break;
            }
        }
        if (u < 0) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 2 * m; ++i)
                if (match[static_cast<std::size_t>(i)] > i)
                    pairs.emplace_back(i, match[static_cast<std::size_t>(i)]);
            out.push_back(from_pairs(m, pairs));
            return;
        }
        for (int v = u + 1; v < 2 * m; ++v) {
            if (match[static_cast<std::size_t>(v)] >= 0)
                continue;
            match[static_cast<std::size_t>(u)] = v;
            match[static_cast<std::size_t>(v)] = u;
            self(self, done + 1);
            match[static_cast<std::size_t>(u)] = -1;
            match[static_cast<std::size_t>(v)] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& x, const BrauerDiagram& y) {
    if (x.size() != y.size())
        throw SizeMismatch("diagram sizes differ");
    const int m = x.size();
    // Result top row = top of y, result bottom row = bottom of x; the middle
    // junction j glues y's bottom node m+j to x's top node j.
    std::vector<bool> junction_used(static_cast<std::size_t>(m), false);

    // Walk from a node of the composite until we exit; nodes of the composite
    // are encoded as (in_y, node).
    auto trace = [&](bool start_in_y, int start_node) -> std::pair<bool, int> {
        bool in_y = start_in_y;
        int node = start_in_y ? y.partner(start_node) : x.partner(start_node);
        while (true) {
            if (in_y) {
                if (node < m) // exited at the composite top
                    return {true, node};
                int j = node - m;
                junction_used[static_cast<std::size_t>(j)] = true;
                in_y = false;
                node = x.partner(j);
            } else {
                if (node >= m) // exited at the composite bottom
                    return {false, node};
                int j = node;
                junction_used[static_cast<std::size_t>(j)] = true;
                in_y = true;
                node = y.partner(m + j);
            }
        }
    };

    std::vector<std::pair<int, int>> pairs;
    std::vector<bool> done_top(static_cast<std::size_t>(m), false);
    std::vector<bool> done_bot(static_cast<std::size_t>(m), false);
    for (int t = 0; t < m; ++t) {
        if (done_top[static_cast<std::size_t>(t)])
            continue;
        auto [exit_in_y, node] = trace(true, t);
        int dest = exit_in_y ? node : node; // composite node id: top t' or bottom m+b
        if (exit_in_y) {
            done_top[static_cast<std::size_t>(node)] = true;
        } else {
            done_bot[static_cast<std::size_t>(node - m)] = true;
        }
        done_top[static_cast<std::size_t>(t)] = true;
        pairs.emplace_back(t, dest);
    }
    for (int b = 0; b < m; ++b) {
        if (done_bot[static_cast<std::size_t>(b)])
            continue;
        auto [exit_in_y, node] = trace(false, m + b);
        // starting from the composite bottom we must exit at the bottom too
        // or at the top; top exits were already handled above
        if (exit_in_y)
            throw InvalidArgument("internal: trace inconsistency");
        done_bot[static_cast<std::size_t>(b)] = true;
        done_bot[static_cast<std::size_t>(node - m)] = true;
        pairs.emplace_back(m + b, node);
    }

    // Remaining junctions sit on closed loops alternating between top arcs of
    // x and bottom arcs of y.
    int loops = 0;
    for (int j = 0; j < m; ++j) {
        if (junction_used[static_cast<std::size_t>(j)])
            continue;
        ++loops;
        int cur = j;
        while (!junction_used[static_cast<std::size_t>(cur)]) {
            junction_used[static_cast<std::size_t>(cur)] = true;
            int via_x = x.partner(cur);        // top arc of x
            junction_used[static_cast<std::size_t>(via_x)] = true;
            cur = y.partner(m + via_x) - m;    // bottom arc of y
        }
    }

    return {BrauerDiagram::from_pairs(m, pairs), loops};
}

} // namespace ospssv

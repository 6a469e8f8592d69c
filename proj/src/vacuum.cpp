#include "ospssv/vacuum.hpp"

#include <sstream>

#include "ospssv/errors.hpp"

namespace ospssv {

int word_parity(const Word& w) {
    int p = 0;
    for (const Gen& g : w)
        p ^= (g.parity & 1);
    return p;
}

void VacuumElement::add(const Word& w, const VarPoly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

VacuumElement VacuumElement::operator-() const {
    VacuumElement r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

VacuumElement& VacuumElement::operator+=(const VacuumElement& o) {
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

VacuumElement& VacuumElement::operator-=(const VacuumElement& o) {
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

VacuumElement& VacuumElement::scale(const VarPoly& c) {
    VacuumElement r;
    for (const auto& [w, v] : terms_)
        r.add(w, v * c);
    *this = std::move(r);
    return *this;
}

VacuumElement VacuumElement::substitute_K(const Rational& k0) const {
    VacuumElement r;
    for (const auto& [w, c] : terms_)
        r.add(w, VarPoly::constant(c.eval(k0), Var::K));
    return r;
}

int VacuumElement::parity() const {
    int p = -1;
    for (const auto& [w, c] : terms_) {
        int q = word_parity(w);
        if (p < 0)
            p = q;
        else if (p != q)
            throw InvalidArgument("inhomogeneous element has no parity");
    }
    return p < 0 ? 0 : p;
}

bool VacuumElement::is_even() const {
    for (const auto& [w, c] : terms_)
        if (word_parity(w) != 0)
            return false;
    return true;
}

int VacuumElement::max_K_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_)
        d = std::max(d, c.degree());
    return d;
}

std::string VacuumElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const Gen& g : w) {
            if (g.is_tau())
                os << "τ";
            else
                os << "F[" << g.basis << "," << g.mode << "]";
        }
        os << "|0>";
    }
    return os.str();
}

nlohmann::json VacuumElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
        nlohmann::json t;
        nlohmann::json mono = nlohmann::json::array();
        for (const Gen& g : w)
            mono.push_back({g.basis, g.mode});
        t["monomial"] = mono;
        nlohmann::json ck = nlohmann::json::array();
        for (int d = 0; d <= c.degree(); ++d)
            ck.push_back(c.coeff(d).str());
        t["coeffK"] = ck;
        arr.push_back(t);
    }
    return arr;
}

VacuumElement Uea::normal_order(const Word& w, bool vacuum) const {
    return normal_order(VarPoly::constant(Rational(1), Var::K), w, vacuum);
}

VacuumElement Uea::normal_order(const VarPoly& coeff, const Word& w, bool vacuum) const {
    VacuumElement out;
    straighten(coeff, w, vacuum, out);
    return out;
}

VacuumElement Uea::u_multiply(const VacuumElement& x, const VacuumElement& y) const {
    VacuumElement out;
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            straighten(cx * cy, w, true, out);
        }
    }
    return out;
}

VacuumElement Uea::apply_gen(const Gen& g, const VacuumElement& x, bool vacuum) const {
    VacuumElement out;
    for (const auto& [w, c] : x.terms()) {
        Word word;
        word.reserve(w.size() + 1);
        word.push_back(g);
        word.insert(word.end(), w.begin(), w.end());
        straighten(c, std::move(word), vacuum, out);
    }
    return out;
}

void Uea::straighten(VarPoly coeff, Word w, bool vacuum, VacuumElement& out) const {
    struct Item {
        VarPoly coeff;
        Word w;
    };
    std::vector<Item> stack;
    stack.push_back({std::move(coeff), std::move(w)});
    const VarPoly kpoly = VarPoly::variable(Var::K);

    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        if (item.coeff.is_zero())
            continue;
        Word& word = item.w;

        bool emitted = false;
        while (true) {
            if (vacuum && !word.empty()) {
                const Gen& last = word.back();
                if (last.is_tau() || last.mode >= 0)
                    break; // annihilates the vacuum; the whole term drops
            }
            int pos = -1;
            enum class Rule { TauMove, Swap, OddSquare } rule = Rule::Swap;
            for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) {
                const Gen& x = word[static_cast<std::size_t>(i)];
                const Gen& y = word[static_cast<std::size_t>(i + 1)];
                if (x.is_tau() && !y.is_tau()) {
                    pos = i;
                    rule = Rule::TauMove;
                    break;
                }
                if (x.is_tau() || y.is_tau())
                    continue;
                if (x == y) {
                    if (x.parity & 1) {
                        pos = i;
                        rule = Rule::OddSquare;
                        break;
                    }
                    continue;
                }
                if (y < x) {
                    pos = i;
                    rule = Rule::Swap;
                    break;
                }
            }
            if (pos < 0) {
                out.add(word, item.coeff);
                emitted = true;
                break;
            }

            const std::size_t i = static_cast<std::size_t>(pos);
            if (rule == Rule::TauMove) {
                // τ F[r] = F[r] τ - r F[r-1]
                Gen f = word[i + 1];
                Word moved = word;
                moved[i] = f;
                moved[i + 1] = Gen::tau();
                Word bracket;
                bracket.reserve(word.size() - 1);
                bracket.insert(bracket.end(), word.begin(), word.begin() + static_cast<long>(i));
                bracket.push_back({f.basis, f.mode - 1, f.parity});
                bracket.insert(bracket.end(), word.begin() + static_cast<long>(i) + 2, word.end());
                stack.push_back({item.coeff * Rational(-f.mode), std::move(bracket)});
                word = std::move(moved);
                continue;
            }

            const Gen x = word[i];
            const Gen y = word[i + 1];
            Word head(word.begin(), word.begin() + static_cast<long>(i));
            Word tail(word.begin() + static_cast<long>(i) + 2, word.end());
            auto with_middle = [&](const Word& mid) {
                Word r = head;
                r.insert(r.end(), mid.begin(), mid.end());
                r.insert(r.end(), tail.begin(), tail.end());
                return r;
            };

            if (rule == Rule::OddSquare) {
                // x odd: x x = (1/2)[x, x]
                AffineBracketResult br =
                    S_->affine_bracket(x.basis, x.mode, x.basis, x.mode);
                for (const auto& [gm, c] : br.linear) {
                    Word mid{gen(gm.first, gm.second)};
                    stack.push_back({item.coeff * (c * Rational(1, 2)), with_middle(mid)});
                }
                if (!br.central.is_zero())
                    stack.push_back(
                        {item.coeff * (kpoly * (br.central * Rational(1, 2))), with_middle({})});
                emitted = true; // original term fully rewritten
                break;
            }

            // out-of-order swap: x y = (-1)^{|x||y|} y x + [x, y]
            AffineBracketResult br = S_->affine_bracket(x.basis, x.mode, y.basis, y.mode);
            for (const auto& [gm, c] : br.linear) {
                Word mid{gen(gm.first, gm.second)};
                stack.push_back({item.coeff * c, with_middle(mid)});
            }
            if (!br.central.is_zero())
                stack.push_back({item.coeff * (kpoly * br.central), with_middle({})});
            Word swapped = with_middle({y, x});
            if ((x.parity & y.parity) & 1)
                item.coeff = -item.coeff;
            word = std::move(swapped);
        }
        (void)emitted;
    }
}

} // namespace ospssv

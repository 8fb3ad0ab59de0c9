#include "wittrb/general_operator.hpp"

namespace wittrb {

void GeneralOperator::set_image(const BasisVector& from, Element to) {
    if (!window_.contains(from.degree)) throw OutsideWindow(from.degree);
    if (to.is_zero())
        images_.erase(from);
    else
        images_[from] = std::move(to);
}

const Element& GeneralOperator::image(const BasisVector& from) const {
    static const Element zero{};
    if (!window_.contains(from.degree)) throw OutsideWindow(from.degree);
    auto it = images_.find(from);
    return it == images_.end() ? zero : it->second;
}

Element GeneralOperator::apply(const Element& x) const {
    Element out;
    for (const auto& [bv, coeff] : x.terms()) out += coeff * image(bv);
    return out;
}

Element GeneralOperator::rb_residual(const BasisVector& x, const BasisVector& y) const {
    const Element ex(x, CoeffPoly::constant(Rational(1)));
    const Element ey(y, CoeffPoly::constant(Rational(1)));
    const Element tx = apply(ex), ty = apply(ey);
    const Element inner = bracket(tx, ey) + bracket(ex, ty);
    return bracket(tx, ty) - apply(inner);
}

bool GeneralOperator::admissible(const BasisVector& x, const BasisVector& y) const {
    try {
        rb_residual(x, y);
        return true;
    } catch (const OutsideWindow&) {
        return false;
    }
}

bool GeneralOperator::is_zero() const { return images_.empty(); }

Json GeneralOperator::to_json() const {
    Json arr = Json::array();
    for (const auto& [from, to] : images_)
        arr.push_back(Json{{"from", basis_to_json(from)}, {"to", element_to_json(to)}});
    return Json{{"window", Json::array({window_.lo, window_.hi})}, {"images", std::move(arr)}};
}

GeneralOperator GeneralOperator::from_json(const Json& j) {
    const auto& jw = j.at("window");
    if (!jw.is_array() || jw.size() != 2) throw ParseError("operator window must be [lo, hi]");
    Window w{jw[0].get<int>(), jw[1].get<int>()};
    if (!w.valid()) throw ParseError("operator window lo > hi");
    GeneralOperator op(w);
    for (const auto& entry : j.at("images")) {
        const BasisVector from = basis_from_json(entry.at("from"));
        if (!w.contains(from.degree))
            throw ParseError("image source degree " + std::to_string(from.degree) +
                             " outside window");
        op.set_image(from, element_from_json(entry.at("to")));
    }
    return op;
}

GeneralOperator GeneralOperator::from_odd(const OddOperator& op) {
    // source degree m is representable iff the table index m+k is
    const Window tw = op.window();
    const int k = op.shift();
    GeneralOperator gen({tw.lo - k, tw.hi - k});
    for (int m = tw.lo - k; m <= tw.hi - k; ++m) {
        gen.set_image(L(m), op.apply(Element(L(m), CoeffPoly::constant(Rational(1)))));
        gen.set_image(G(m), op.apply(Element(G(m), CoeffPoly::constant(Rational(1)))));
    }
    return gen;
}

std::pair<GeneralOperator, GeneralOperator> split_parity(const GeneralOperator& T) {
    GeneralOperator even(T.window()), odd(T.window());
    for (int d = T.window().lo; d <= T.window().hi; ++d)
        for (const BasisVector bv : {L(d), G(d)}) {
            const Element img = T.image(bv);
            even.set_image(bv, img.parity_component(bv.parity()));
            odd.set_image(bv, img.parity_component(opposite(bv.parity())));
        }
    return {std::move(even), std::move(odd)};
}

std::pair<Element, Element> projected_rb_residuals(const GeneralOperator& T,
                                                   const BasisVector& x, const BasisVector& y) {
    Element full;
    try {
        full = T.rb_residual(x, y);
    } catch (const OutsideWindow& e) {
        throw Inadmissible("pair (" + x.str() + ", " + y.str() + ") touches degree " +
                           std::to_string(e.index));
    }
    const Parity p = x.parity() + y.parity();
    return {full.parity_component(p), full.parity_component(opposite(p))};
}

GeneralSweepReport sweep_general(const GeneralOperator& T) {
    GeneralSweepReport rep;
    const Window& w = T.window();
    for (int m = w.lo; m <= w.hi; ++m)
        for (const BasisVector x : {L(m), G(m)})
            for (int n = w.lo; n <= w.hi; ++n)
                for (const BasisVector y : {L(n), G(n)}) {
                    try {
                        const Element r = T.rb_residual(x, y);
                        ++rep.checked;
                        if (!r.is_zero()) rep.failures.emplace_back(x, y);
                    } catch (const OutsideWindow&) {
                        ++rep.skipped;
                    }
                }
    return rep;
}

ClaimSearchReport componentwise_claim_search(
    const std::vector<std::pair<std::string, GeneralOperator>>& candidates) {
    ClaimSearchReport rep;
    for (const auto& [label, T] : candidates) {
        ++rep.candidates;
        if (T.is_zero() || !sweep_general(T).pass()) continue;
        ++rep.full_rb_passers;
        const auto [even, odd] = split_parity(T);
        const GeneralSweepReport even_rep = sweep_general(even);
        const GeneralSweepReport odd_rep = sweep_general(odd);
        ClaimSearchEntry entry;
        entry.label = label;
        entry.operator_json = T.to_json();
        entry.full_rb = true;
        entry.even_rb = even_rep.pass();
        entry.odd_rb = odd_rep.pass();
        if (!entry.even_rb) {
            entry.failing_component = "even";
            entry.counterexample = even_rep.failures.front();
        } else if (!entry.odd_rb) {
            entry.failing_component = "odd";
            entry.counterexample = odd_rep.failures.front();
        }
        rep.claim_holds_for_all = rep.claim_holds_for_all && entry.even_rb && entry.odd_rb;
        rep.passers.push_back(std::move(entry));
    }
    return rep;
}

std::vector<std::pair<std::string, GeneralOperator>> builtin_claim_candidates(Window window) {
    std::vector<std::pair<std::string, GeneralOperator>> out;
    const CoeffPoly c = CoeffPoly::c();
    const auto elem = [](const BasisVector& bv, CoeffPoly coeff) {
        return Element(bv, std::move(coeff));
    };

    // solved odd families, restricted to the window
    if (window.contains(-1) && window.contains(0)) {
        GeneralOperator op(window);
        op.set_image(G(-1), elem(L(0), c)); // k=1 family g = c delta_0
        out.emplace_back("odd-delta0-k1", std::move(op));
    }
    if (window.contains(1)) {
        GeneralOperator op(window);
        op.set_image(G(1), elem(L(1), c)); // k=0 family g = c delta_{1-k}
        out.emplace_back("odd-delta1mk-k0", std::move(op));
    }
    {
        GeneralOperator op(window);
        for (int m = window.lo; m <= window.hi; ++m) op.set_image(L(m), elem(G(m), c));
        out.emplace_back("odd-trivialg-k0", std::move(op)); // f == c, g == 0
    }
    // even diagonal operators
    if (window.contains(0)) {
        GeneralOperator op(window);
        op.set_image(L(0), elem(L(0), c));
        out.emplace_back("even-pL0", std::move(op));
    }
    if (window.contains(-1)) {
        GeneralOperator op(window);
        op.set_image(G(-1), elem(G(-1), c));
        out.emplace_back("even-pGm1", std::move(op));
    }
    if (window.contains(0) && window.contains(-1)) {
        GeneralOperator op(window);
        op.set_image(L(0), elem(L(0), c));
        op.set_image(G(-1), elem(G(-1), CoeffPoly::c(make_rational(2))));
        out.emplace_back("even-pL0+pGm1", std::move(op));
        GeneralOperator mix(window);
        mix.set_image(L(0), elem(L(0), c));
        mix.set_image(G(-1), elem(G(-1), c) + elem(L(0), c));
        out.emplace_back("mixed-pL0-pGm1-delta0k1", std::move(mix));
    }

    // exhaustive single-term-image enumeration
    std::vector<BasisVector> basis;
    for (int d = window.lo; d <= window.hi; ++d) {
        basis.push_back(L(d));
        basis.push_back(G(d));
    }
    const long long coeffs[] = {-2, -1, 1, 2};
    for (const auto& from : basis)
        for (const auto& to : basis)
            for (long long v : coeffs) {
                GeneralOperator op(window);
                op.set_image(from, elem(to, CoeffPoly::constant(make_rational(v))));
                out.emplace_back("single:" + from.str() + "->" + std::to_string(v) + "*" + to.str(),
                                 std::move(op));
            }

    // two-image enumeration over a small mixed-parity source/target set
    std::vector<BasisVector> small;
    for (const BasisVector bv : {L(0), L(1), G(-1), G(0)})
        if (window.contains(bv.degree)) small.push_back(bv);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j)
            for (const auto& t1 : small)
                for (long long v1 : coeffs)
                    for (const auto& t2 : small)
                        for (long long v2 : coeffs) {
                            GeneralOperator op(window);
                            op.set_image(small[i], elem(t1, CoeffPoly::constant(make_rational(v1))));
                            op.set_image(small[j], elem(t2, CoeffPoly::constant(make_rational(v2))));
                            out.emplace_back("pair:" + small[i].str() + "->" + std::to_string(v1) +
                                                 "*" + t1.str() + ";" + small[j].str() + "->" +
                                                 std::to_string(v2) + "*" + t2.str(),
                                             std::move(op));
                        }
    return out;
}

} // namespace wittrb

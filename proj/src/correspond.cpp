#include "findual/correspond.hpp"

namespace findual {

const char* to_string(ModalProperty p) {
    switch (p) {
        case ModalProperty::reflexive: return "reflexive";
        case ModalProperty::symmetric: return "symmetric";
        case ModalProperty::euclidean: return "euclidean";
        case ModalProperty::transitive: return "transitive";
        case ModalProperty::total: return "total";
        case ModalProperty::empty: return "empty";
        case ModalProperty::quantifier: return "quantifier";
    }
    return "?";
}

ModalProperty modal_property_from_string(const std::string& s) {
    for (ModalProperty p : kAllModalProperties)
        if (s == to_string(p)) return p;
    throw schema_error("unknown modal property: " + s);
}

bool operator_side(const Operator& h, ModalProperty p) {
    if (h.arity_in() != 1 || h.arity_out() != 1)
        throw std::invalid_argument("modal correspondence requires a (1,1) operator");
    const FiniteDistLattice& l = h.lattice();
    std::vector<Bitset> elems = l.elements();
    auto hv = [&](const Bitset& x) { return h.eval1(x); };
    switch (p) {
        case ModalProperty::reflexive:
            for (const Bitset& a : elems)
                if (!a.subset_of(hv(a))) return false;
            return true;
        case ModalProperty::symmetric:
            for (const Bitset& a : elems)
                for (const Bitset& b : elems)
                    if (!(a & hv(b)).subset_of(hv(hv(a) & b))) return false;
            return true;
        case ModalProperty::euclidean:
            for (const Bitset& a : elems)
                for (const Bitset& b : elems)
                    if (!(hv(a) & hv(b)).subset_of(hv(a & hv(b)))) return false;
            return true;
        case ModalProperty::transitive:
            for (const Bitset& a : elems)
                for (const Bitset& b : elems)
                    if (!hv(a & hv(b)).subset_of(hv(a) & hv(b))) return false;
            return true;
        case ModalProperty::total:
            return hv(l.top()) == l.top();
        case ModalProperty::empty:
            return hv(l.top()) == l.bot();
        case ModalProperty::quantifier:
            return operator_side(h, ModalProperty::reflexive) &&
                   operator_side(h, ModalProperty::euclidean) &&
                   operator_side(h, ModalProperty::total);
    }
    return false;
}

bool relation_side(const DualRelation& rho, ModalProperty p) {
    if (rho.arity_k() != 1 || rho.arity_n() != 1)
        throw std::invalid_argument("modal correspondence requires a (1,1) relation");
    const Poset& x = rho.base();
    int n = x.size();
    auto rel = [&](int a, int b) { return rho.related(a, b); };
    switch (p) {
        case ModalProperty::reflexive:
            for (int a = 0; a < n; ++a)
                if (!rel(a, a)) return false;
            return true;
        case ModalProperty::symmetric:
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (!rel(a, b)) continue;
                    bool ok = false;
                    for (int w = 0; w < n && !ok; ++w)
                        ok = x.leq(w, b) && rel(a, w) && rel(w, a);
                    if (!ok) return false;
                }
            return true;
        case ModalProperty::euclidean:
            for (int c = 0; c < n; ++c)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (!rel(c, a) || !rel(c, b)) continue;
                        bool ok = false;
                        for (int w = 0; w < n && !ok; ++w)
                            ok = x.leq(w, a) && rel(w, b) && rel(c, w);
                        if (!ok) return false;
                    }
            return true;
        case ModalProperty::transitive:
            for (int c = 0; c < n; ++c)
                for (int w = 0; w < n; ++w)
                    for (int b = 0; b < n; ++b)
                        if (rel(c, w) && rel(w, b) && !rel(c, b)) return false;
            return true;
        case ModalProperty::total:
            for (int a = 0; a < n; ++a) {
                bool ok = false;
                for (int b = 0; b < n && !ok; ++b) ok = rel(a, b);
                if (!ok) return false;
            }
            return true;
        case ModalProperty::empty:
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (rel(a, b)) return false;
            return true;
        case ModalProperty::quantifier:
            return relation_side(rho, ModalProperty::reflexive) &&
                   relation_side(rho, ModalProperty::euclidean) &&
                   relation_side(rho, ModalProperty::total);
    }
    return false;
}

CorrespondenceReport check_correspondence(const Operator& h, ModalProperty p) {
    CorrespondenceReport r;
    r.op_side = operator_side(h, p);
    r.rel_side = relation_side(dualize_operator(h), p);
    r.agree = r.op_side == r.rel_side;
    if (!r.agree)
        throw cross_check_error(std::string("modal correspondence mismatch for property ") +
                                to_string(p));
    return r;
}

}  // namespace findual

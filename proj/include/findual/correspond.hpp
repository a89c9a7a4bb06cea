#pragma once

#include "findual/op.hpp"

namespace findual {

enum class ModalProperty { reflexive, symmetric, euclidean, transitive, total, empty, quantifier };

const char* to_string(ModalProperty p);
ModalProperty modal_property_from_string(const std::string& s);
inline constexpr std::array<ModalProperty, 7> kAllModalProperties = {
    ModalProperty::reflexive, ModalProperty::symmetric,  ModalProperty::euclidean,
    ModalProperty::transitive, ModalProperty::total,     ModalProperty::empty,
    ModalProperty::quantifier};

/// Evaluates the operator-side (in)equation over all lattice elements.
/// Requires a (1,1) operator on an enumerable lattice.
bool operator_side(const Operator& h, ModalProperty p);

/// First-order check on the dual pair set, in the positive-logic form that is
/// order-correct on every poset (reduces to the classical condition on
/// discrete posets):
///   reflexive:  a rho a
///   symmetric:  a rho b  =>  exists w <= b: a rho w and w rho a
///   euclidean:  c rho a and c rho b  =>  exists w <= a: w rho b and c rho w
///   transitive: c rho w and w rho b  =>  c rho b
///   total / empty: as usual; quantifier = reflexive and euclidean and total.
bool relation_side(const DualRelation& rho, ModalProperty p);

struct CorrespondenceReport {
    bool op_side = false;
    bool rel_side = false;
    bool agree = false;
};

/// Computes both sides independently; disagreement throws cross_check_error.
CorrespondenceReport check_correspondence(const Operator& h, ModalProperty p);

}  // namespace findual

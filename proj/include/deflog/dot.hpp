#ifndef DEFLOG_DOT_HPP
#define DEFLOG_DOT_HPP

#include <string>

#include "deflog/sentence_set.hpp"

namespace deflog {

/// Renders a theory as a DOT digraph: one node per theory sentence and per
/// reachable subsentence, a support edge antecedent -> consequent for each
/// conditional, and an X-headed attack edge pointing at the target of each
/// conditional whose consequent is a dialectical negation.
///
/// With annotate set, the theory must have exactly one extension
/// (PreconditionError otherwise) and nodes are styled justified / defeated
/// / not interpreted.
std::string to_dot(const Theory& delta, bool annotate = false);

} // namespace deflog

#endif

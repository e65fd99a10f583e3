#ifndef DEFLOG_PARSER_HPP
#define DEFLOG_PARSER_HPP

#include <string>
#include <string_view>

#include "deflog/errors.hpp"
#include "deflog/sentence.hpp"
#include "deflog/sentence_set.hpp"

namespace deflog {

/// Parses one sentence.
///
/// Grammar: atoms are [A-Za-z_][A-Za-z0-9_]*; `~e` is dialectical negation
/// (binds tightest); `a -> b` is support, right-associative; parentheses
/// group. Two pieces of surface sugar desugar away: `a -x> b` becomes
/// `a -> ~b`, and `&` (allowed only inside an antecedent) curries, so
/// `(a & b) -> c` becomes `a -> (b -> c)`.
///
/// Throws ParseError with 1-based line/column on malformed input and on
/// `&` in any non-antecedent position.
Sentence parse_sentence(SentenceStore& store, std::string_view text, std::size_t line = 1);

/// Parses a theory file: one sentence per non-blank line, `#` starts a
/// comment, duplicates collapse silently. Throws TheoryParseError carrying
/// every per-line error.
Theory parse_theory(SentenceStore& store, std::string_view text);

/// Canonical text form with minimal parenthesization. parse(render(s)) == s
/// and render is injective. Desugared: the output never contains `&` or `-x>`.
std::string render(Sentence s);

/// Renders a set as `{a, b, ...}` in canonical order.
std::string render_set(const SentenceSet& set);

} // namespace deflog

#endif

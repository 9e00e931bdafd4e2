#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bsaf/combined_split.hpp"
#include "bsaf/core.hpp"
#include "bsaf/error.hpp"
#include "bsaf/semantics.hpp"

namespace bsaf {

/// 1-based position in the parsed text.
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind { SyntaxError, UnknownArgument, DuplicateArgument, ReservedName, EmptyCut, FullCut };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, std::string detail, std::string name = {});

    ParseErrorKind kind() const { return kind_; }
    const SourceSpan& span() const { return span_; }
    /// Offending argument name, empty for pure syntax errors.
    const std::string& name() const { return name_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
    std::string name_;
};

struct ParseOptions {
    /// Accept `*0`, `*1`, `*2` declarations, as found in serialized reducts.
    bool allow_dummies = false;
};

/// Reads the `bsaf 1` format:
///
///     bsaf 1
///     arg a
///     att a b -> c
///     sup -> d
///
/// `#` starts a comment. Arguments must be declared before use.
Framework parse_framework(std::string_view text, ParseOptions options = {});

/// Canonical text: header, arguments in index order, then attacks and
/// supports each sorted by (head, tail).
std::string serialize_framework(const Framework& f);

/// A `cut` header followed by one argument name per line.
Extension parse_cut(std::string_view text, const Framework& f);
std::string serialize_cut(const Framework& f, Extension a1);

/// "a,b" with members in index order; "{}" for the empty set.
std::string format_extension(const ArgumentTable& table, Extension e);

/// One extension per line, lines ordered by their name sequences; `NONE`
/// for an empty family.
std::string serialize_extensions(const ArgumentTable& table, const ExtensionSet& exts);
ExtensionSet parse_extensions(std::string_view text, const Framework& f);

/// Parses one extension line ("a,b" or "{}") against f.
Extension parse_extension(std::string_view text, const Framework& f);

/// Each stage as `# stage: <name>` followed by its frame, or by its links for hat_r3.
std::string serialize_trace(const PipelineTrace& trace);

}  // namespace bsaf

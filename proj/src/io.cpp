#include "bsaf/io.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <utility>

namespace bsaf {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::SyntaxError: return "syntax error";
        case ParseErrorKind::UnknownArgument: return "unknown argument";
        case ParseErrorKind::DuplicateArgument: return "duplicate argument";
        case ParseErrorKind::ReservedName: return "reserved name";
        case ParseErrorKind::EmptyCut: return "empty cut";
        case ParseErrorKind::FullCut: return "full cut";
    }
    return "parse error";
}

namespace {

std::string render(ParseErrorKind kind, SourceSpan span, const std::string& detail) {
    return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + std::string(to_string(kind)) +
           (detail.empty() ? "" : ": " + detail);
}

struct Token {
    std::string_view text;
    SourceSpan span;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Splits into lines, drops comments and blank lines, and tokenizes on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
        while (i < raw.size()) {
            while (i < raw.size() && space(raw[i])) ++i;
            std::size_t start = i;
            while (i < raw.size() && !space(raw[i])) ++i;
            if (i > start) line.tokens.push_back(Token{raw.substr(start, i - start), SourceSpan{number, start + 1}});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::optional<ArgKind> dummy_kind(std::string_view name) {
    for (ArgKind k : {ArgKind::Dummy0, ArgKind::Dummy1, ArgKind::Dummy2}) {
        if (name == dummy_name(k)) return k;
    }
    return std::nullopt;
}

SourceSpan after(const Token& t) { return SourceSpan{t.span.line, t.span.column + t.text.size()}; }

}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, std::string detail, std::string name)
    : Error(render(kind, span, detail)), kind_(kind), span_(span), name_(std::move(name)) {}

Framework parse_framework(std::string_view text, ParseOptions options) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(ParseErrorKind::SyntaxError, SourceSpan{1, 1}, "missing 'bsaf 1' header");
    const Line& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0].text != "bsaf" || header.tokens[1].text != "1") {
        throw ParseError(ParseErrorKind::SyntaxError, header.tokens.front().span, "expected 'bsaf 1' header");
    }

    auto table = std::make_shared<ArgumentTable>();
    std::vector<Link> attacks;
    std::vector<Link> supports;

    auto lookup = [&](const Token& t) {
        auto id = table->find(t.text);
        if (!id) {
            throw ParseError(ParseErrorKind::UnknownArgument, t.span, "'" + std::string(t.text) + "'",
                             std::string(t.text));
        }
        return *id;
    };

    for (auto line = lines.begin() + 1; line != lines.end(); ++line) {
        const auto& tok = line->tokens;
        const std::string_view keyword = tok[0].text;
        if (keyword == "arg") {
            if (tok.size() != 2) {
                SourceSpan where = tok.size() < 2 ? after(tok[0]) : tok[2].span;
                throw ParseError(ParseErrorKind::SyntaxError, where, "expected 'arg <name>'");
            }
            const Token& name = tok[1];
            std::string s(name.text);
            if (table->find(s)) throw ParseError(ParseErrorKind::DuplicateArgument, name.span, "'" + s + "'", s);
            ArgKind kind = ArgKind::User;
            if (s.front() == '*') {
                auto dk = dummy_kind(s);
                if (!options.allow_dummies || !dk) {
                    throw ParseError(ParseErrorKind::ReservedName, name.span, "'" + s + "'", s);
                }
                kind = *dk;
            } else if (!is_valid_user_name(s)) {
                throw ParseError(ParseErrorKind::SyntaxError, name.span, "invalid argument name '" + s + "'", s);
            }
            if (table->size() >= kMaxArguments) {
                throw ParseError(ParseErrorKind::SyntaxError, name.span,
                                 "too many arguments (limit " + std::to_string(kMaxArguments) + ")", s);
            }
            table->add(std::move(s), kind);
        } else if (keyword == "att" || keyword == "sup") {
            auto arrow = std::find_if(tok.begin() + 1, tok.end(), [](const Token& t) { return t.text == "->"; });
            if (arrow == tok.end()) throw ParseError(ParseErrorKind::SyntaxError, after(tok.back()), "expected '->'");
            if (arrow + 1 == tok.end()) {
                throw ParseError(ParseErrorKind::SyntaxError, after(*arrow), "expected head argument");
            }
            if (arrow + 2 != tok.end()) {
                throw ParseError(ParseErrorKind::SyntaxError, (arrow + 2)->span, "unexpected token after head");
            }
            Link link{ArgSet{}, lookup(*(arrow + 1))};
            for (auto t = tok.begin() + 1; t != arrow; ++t) link.tail.insert(lookup(*t));
            (keyword == "att" ? attacks : supports).push_back(link);
        } else {
            throw ParseError(ParseErrorKind::SyntaxError, tok[0].span, "unknown directive '" + std::string(keyword) + "'");
        }
    }
    const ArgSet args = ArgSet::first_n(table->size());
    return Framework(std::move(table), args, std::move(attacks), std::move(supports));
}

namespace {

void append_links(std::string& out, const ArgumentTable& table, std::string_view keyword, std::vector<Link> links) {
    canonicalize(links);
    for (const Link& l : links) {
        out += keyword;
        for (ArgId t : l.tail) {
            out += ' ';
            out += table[t].name;
        }
        out += " -> ";
        out += table[l.head].name;
        out += '\n';
    }
}

std::vector<std::string_view> names_of(const ArgumentTable& table, Extension e) {
    std::vector<std::string_view> names;
    for (ArgId id : e) names.push_back(table[id].name);
    return names;
}

}  // namespace

std::string serialize_framework(const Framework& f) {
    std::string out = "bsaf 1\n";
    for (ArgId id : f.args()) {
        out += "arg ";
        out += f.name(id);
        out += '\n';
    }
    append_links(out, f.table(), "att", f.attacks());
    append_links(out, f.table(), "sup", f.supports());
    return out;
}

Extension parse_cut(std::string_view text, const Framework& f) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(ParseErrorKind::SyntaxError, SourceSpan{1, 1}, "missing 'cut' header");
    const Line& header = lines.front();
    if (header.tokens.size() != 1 || header.tokens[0].text != "cut") {
        throw ParseError(ParseErrorKind::SyntaxError, header.tokens.front().span, "expected 'cut' header");
    }
    Extension a1;
    for (auto line = lines.begin() + 1; line != lines.end(); ++line) {
        if (line->tokens.size() != 1) {
            throw ParseError(ParseErrorKind::SyntaxError, line->tokens[1].span, "expected one name per line");
        }
        const Token& t = line->tokens[0];
        auto id = f.table().find(t.text);
        if (!id || !f.args().contains(*id)) {
            throw ParseError(ParseErrorKind::UnknownArgument, t.span, "'" + std::string(t.text) + "'",
                             std::string(t.text));
        }
        a1.insert(*id);
    }
    const SourceSpan end{lines.back().number, 1};
    if (a1.empty()) throw ParseError(ParseErrorKind::EmptyCut, end, "A1 must not be empty");
    if (a1 == f.args()) throw ParseError(ParseErrorKind::FullCut, end, "A1 must not contain every argument");
    return a1;
}

std::string serialize_cut(const Framework& f, Extension a1) {
    std::string out = "cut\n";
    for (ArgId id : a1) {
        out += f.name(id);
        out += '\n';
    }
    return out;
}

std::string format_extension(const ArgumentTable& table, Extension e) {
    if (e.empty()) return "{}";
    std::string out;
    for (ArgId id : e) {
        if (!out.empty()) out += ',';
        out += table[id].name;
    }
    return out;
}

std::string serialize_extensions(const ArgumentTable& table, const ExtensionSet& exts) {
    if (exts.empty()) return "NONE\n";
    std::vector<Extension> sorted(exts.begin(), exts.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](Extension a, Extension b) { return names_of(table, a) < names_of(table, b); });
    std::string out;
    for (Extension e : sorted) {
        out += format_extension(table, e);
        out += '\n';
    }
    return out;
}

Extension parse_extension(std::string_view text, const Framework& f) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    Extension e;
    if (text == "{}") return e;
    if (text.empty()) throw ParseError(ParseErrorKind::SyntaxError, SourceSpan{1, 1}, "empty extension");
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view name = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        auto id = f.table().find(name);
        if (!id || !f.args().contains(*id)) {
            throw ParseError(ParseErrorKind::UnknownArgument, SourceSpan{1, pos + 1}, "'" + std::string(name) + "'",
                             std::string(name));
        }
        e.insert(*id);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return e;
}

ExtensionSet parse_extensions(std::string_view text, const Framework& f) {
    const std::vector<Line> lines = tokenize(text);
    ExtensionSet out;
    if (lines.size() == 1 && lines[0].tokens.size() == 1 && lines[0].tokens[0].text == "NONE") return out;
    if (lines.empty()) throw ParseError(ParseErrorKind::SyntaxError, SourceSpan{1, 1}, "expected extensions or NONE");
    for (const Line& line : lines) {
        if (line.tokens.size() != 1) {
            throw ParseError(ParseErrorKind::SyntaxError, line.tokens[1].span, "unexpected whitespace in extension");
        }
        try {
            out.insert(parse_extension(line.tokens[0].text, f));
        } catch (const ParseError& e) {
            SourceSpan span{line.number, line.tokens[0].span.column + e.span().column - 1};
            throw ParseError(e.kind(), span, "'" + e.name() + "'", e.name());
        }
    }
    return out;
}

std::string serialize_trace(const PipelineTrace& trace) {
    std::string out;
    auto stage = [&](std::string_view name) {
        out += "# stage: ";
        out += name;
        out += '\n';
    };
    stage("hat_f2");
    out += serialize_framework(trace.hat_f2);
    stage("hat_r3");
    append_links(out, trace.hat_f2.table(), "att", trace.hat_r3);
    stage("reduct");
    out += serialize_framework(trace.reduct);
    stage("star");
    out += serialize_framework(trace.star);
    stage("final");
    out += serialize_framework(trace.final_frame);
    return out;
}

}  // namespace bsaf

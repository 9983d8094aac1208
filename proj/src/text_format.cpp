// turing: a Turing machine toolkit
// Copyright 2026 The turing Authors.
// SPDX-License-Identifier: Apache-2.0

#include "turing/text_format.hpp"

#include "turing/error.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace turing
{
namespace
{
struct Token
{
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

template <typename T, typename Conv>
std::vector<T> parse_group(std::span<const Token> tokens, std::size_t k, std::size_t line,
                           const char* what, Conv conv)
{
    std::vector<T> out;
    for (const Token& tok : tokens)
    {
        for (std::size_t j = 0; j < tok.text.size(); ++j)
        {
            auto v = conv(tok.text[j]);
            if (!v)
                throw SyntaxError(line, tok.column + j,
                                  std::string("bad ") + what + " '" + tok.text[j] + "'");
            out.push_back(*v);
        }
    }
    if (out.size() != k)
        throw SyntaxError(line, tokens.front().column,
                          std::string("expected ") + std::to_string(k) + " " + what + "s");
    return out;
}

void parse_header(std::string_view body, std::size_t line, std::size_t column,
                  MachineDocument& doc)
{
    const auto colon = body.find(':');
    const auto key = trim(body.substr(0, colon));
    const auto value = trim(body.substr(colon + 1));
    if (key == "tapes")
    {
        std::size_t k = 0;
        if (value.empty() || value.size() > 3)
            throw SyntaxError(line, column, "bad tape count");
        for (char c : value)
        {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw SyntaxError(line, column, "bad tape count '" + std::string(value) + "'");
            k = k * 10 + static_cast<std::size_t>(c - '0');
        }
        if (k == 0)
            throw SyntaxError(line, column, "tape count must be at least 1");
        doc.tapes = k;
    }
    else if (key == "readonly-input")
    {
        if (value == "yes")
            doc.readonly_input = true;
        else if (value == "no")
            doc.readonly_input = false;
        else
            throw SyntaxError(line, column, "readonly-input must be yes or no");
    }
    else
    {
        throw SyntaxError(line, column, "unknown header '" + std::string(key) + "'");
    }
}

}  // namespace

bool is_state_name(std::string_view name) noexcept
{
    if (name.empty())
        return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!(std::isalpha(head) || head == '_'))
        return false;
    for (char c : name.substr(1))
    {
        auto u = static_cast<unsigned char>(c);
        if (!(std::isalnum(u) || u == '_'))
            return false;
    }
    return true;
}

MachineDocument parse_document(std::string_view text)
{
    MachineDocument doc;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty())
            continue;

        if (line.find(':') != std::string_view::npos)
        {
            const auto first = line.find_first_not_of(" \t");
            if (!doc.rules.empty())
                throw SyntaxError(line_no, first + 1, "header after first rule");
            parse_header(line, line_no, first + 1, doc);
            continue;
        }

        const auto tokens = tokenize(line);
        const std::size_t k = doc.tapes;
        std::span<const Token> scan_toks, act_toks;
        if (tokens.size() == 4)
        {
            scan_toks = std::span(tokens).subspan(1, 1);
            act_toks = std::span(tokens).subspan(2, 1);
        }
        else if (k > 1 && tokens.size() == 2 * k + 2)
        {
            scan_toks = std::span(tokens).subspan(1, k);
            act_toks = std::span(tokens).subspan(1 + k, k);
        }
        else
        {
            const std::size_t col = tokens.empty() ? 1 : tokens.front().column;
            throw SyntaxError(line_no, col, "expected '<p> <sym> <act> <q>', got " +
                                                std::to_string(tokens.size()) + " fields");
        }

        for (const Token* t : {&tokens.front(), &tokens.back()})
            if (!is_state_name(t->text))
                throw SyntaxError(line_no, t->column,
                                  "bad state name '" + std::string(t->text) + "'");

        RuleLine rule;
        rule.from = std::string(tokens.front().text);
        rule.to = std::string(tokens.back().text);
        rule.scan = parse_group<Symbol>(scan_toks, k, line_no, "symbol", symbol_from_char);
        rule.actions = parse_group<Action>(act_toks, k, line_no, "action", action_from_char);
        rule.line = line_no;
        doc.rules.push_back(std::move(rule));
    }

    if (doc.rules.empty())
        throw Error(ErrorKind::EmptyMachine, "machine description has no rules");
    return doc;
}

Machine parse_machine(std::string_view text)
{
    const MachineDocument doc = parse_document(text);
    if (doc.tapes != 1 || doc.readonly_input)
        throw Error(ErrorKind::InvalidMachine,
                    "expected a single-tape machine, found tapes: " + std::to_string(doc.tapes));

    std::map<std::pair<std::string, Symbol>, std::size_t> seen;
    std::vector<NamedRule> rules;
    rules.reserve(doc.rules.size());
    for (const RuleLine& r : doc.rules)
    {
        auto [it, inserted] = seen.emplace(std::pair{r.from, r.scan[0]}, r.line);
        if (!inserted)
            throw Error(ErrorKind::Determinism,
                        "line " + std::to_string(r.line) + ": (" + r.from + ", " +
                            to_char(r.scan[0]) + ") already defined on line " +
                            std::to_string(it->second));
        rules.push_back({r.from, r.scan[0], r.actions[0], r.to});
    }
    return Machine::from_named(rules);
}

std::string serialize(const Machine& m)
{
    std::string out;
    for (const Rule& r : m.rules())
    {
        out += m.state_name(r.from);
        out += ' ';
        out += to_char(r.scan);
        out += ' ';
        out += to_char(r.action);
        out += ' ';
        out += m.state_name(r.to);
        out += '\n';
    }
    return out;
}

std::string serialize(const MachineDocument& doc)
{
    std::string out;
    if (doc.tapes != 1)
        out += "tapes: " + std::to_string(doc.tapes) + "\n";
    if (doc.readonly_input)
        out += "readonly-input: yes\n";
    for (const RuleLine& r : doc.rules)
    {
        out += r.from;
        out += ' ';
        for (Symbol s : r.scan)
            out += to_char(s);
        out += ' ';
        for (Action a : r.actions)
            out += to_char(a);
        out += ' ';
        out += r.to;
        out += '\n';
    }
    return out;
}

}  // namespace turing

#include "ringlab/ringspec.hpp"

#include <cctype>

namespace ringlab {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found,
                       std::string message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message),
      position_(position), expected_(std::move(expected)), found_(std::move(found))
{
}

namespace {

bool starts_with_word(std::string_view text, std::size_t pos, std::string_view word)
{
    return text.substr(pos, word.size()) == word;
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    static constexpr std::string_view kWords[] = {"corner", "upper", "lower"};
    static constexpr std::string_view kTimes = "\xC3\x97"; // U+00D7
    static constexpr std::string_view kSymbols = "()[],/^{}<>";

    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        Token t;
        t.begin = i;
        if (is_digit(c)) {
            t.kind = TokenKind::Integer;
            while (i < text.size() && is_digit(text[i]))
                ++i;
        } else if (is_alpha(c)) {
            t.kind = TokenKind::Identifier;
            ++i;
            for (auto w : kWords)
                if (starts_with_word(text, t.begin, w)) {
                    i = t.begin + w.size();
                    break;
                }
        } else if (c == '@') {
            t.kind = TokenKind::Identifier;
            ++i;
            while (i < text.size() && text[i] != ']' && !is_space(text[i]))
                ++i;
        } else if (starts_with_word(text, i, kTimes)) {
            t.kind = TokenKind::Symbol;
            i += kTimes.size();
        } else if (kSymbols.find(c) != std::string_view::npos) {
            t.kind = TokenKind::Symbol;
            ++i;
        } else {
            std::string found = std::isprint(static_cast<unsigned char>(c))
                                    ? std::string(1, c)
                                    : "byte " + std::to_string(static_cast<unsigned char>(c));
            throw ParseError(i, {}, found, "unexpected character '" + found + "'");
        }
        t.end = i;
        t.text = std::string(text.substr(t.begin, t.end - t.begin));
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = TokenKind::End;
    end.begin = end.end = text.size();
    out.push_back(end);
    return out;
}

} // namespace ringlab

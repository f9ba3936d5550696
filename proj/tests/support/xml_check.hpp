#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

// Minimal XML well-formedness checker used as an oracle for emitted SVG:
// balanced tags, quoted attributes, sane entities, a single root element.
namespace testsupport {

struct XmlCheckResult {
    bool ok = true;
    std::string error;
};

inline XmlCheckResult check_xml(std::string_view text) {
    const auto fail = [](const std::string& why) { return XmlCheckResult{false, why}; };
    std::vector<std::string> stack;
    std::size_t roots = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();

    const auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
               c == '.';
    };

    while (i < n) {
        const char c = text[i];
        if (c == '<') {
            if (i + 1 >= n) {
                return fail("dangling '<' at end of document");
            }
            if (text[i + 1] == '?') {
                const auto end = text.find("?>", i);
                if (end == std::string_view::npos) {
                    return fail("unterminated declaration");
                }
                i = end + 2;
                continue;
            }
            if (text.compare(i, 4, "<!--") == 0) {
                const auto end = text.find("-->", i);
                if (end == std::string_view::npos) {
                    return fail("unterminated comment");
                }
                i = end + 3;
                continue;
            }
            const bool closing = text[i + 1] == '/';
            std::size_t p = i + (closing ? 2 : 1);
            std::string name;
            while (p < n && is_name_char(text[p])) {
                name.push_back(text[p]);
                ++p;
            }
            if (name.empty()) {
                return fail("tag without a name near offset " + std::to_string(i));
            }
            // attributes
            bool self_closing = false;
            while (p < n && text[p] != '>') {
                if (std::isspace(static_cast<unsigned char>(text[p]))) {
                    ++p;
                    continue;
                }
                if (text[p] == '/') {
                    self_closing = true;
                    ++p;
                    continue;
                }
                if (closing) {
                    return fail("closing tag </" + name + "> has attributes");
                }
                std::string attr;
                while (p < n && is_name_char(text[p])) {
                    attr.push_back(text[p]);
                    ++p;
                }
                if (attr.empty()) {
                    return fail("bad attribute in <" + name + ">");
                }
                if (p >= n || text[p] != '=') {
                    return fail("attribute " + attr + " without '='");
                }
                ++p;
                if (p >= n || (text[p] != '"' && text[p] != '\'')) {
                    return fail("attribute " + attr + " value is unquoted");
                }
                const char quote = text[p];
                ++p;
                while (p < n && text[p] != quote) {
                    if (text[p] == '<') {
                        return fail("'<' inside attribute value of " + attr);
                    }
                    ++p;
                }
                if (p >= n) {
                    return fail("unterminated attribute value of " + attr);
                }
                ++p;
            }
            if (p >= n) {
                return fail("unterminated tag <" + name + ">");
            }
            ++p;  // consume '>'
            if (closing) {
                if (self_closing) {
                    return fail("malformed closing tag </" + name + ">");
                }
                if (stack.empty() || stack.back() != name) {
                    return fail("mismatched closing tag </" + name + ">");
                }
                stack.pop_back();
            } else if (self_closing) {
                if (stack.empty()) {
                    ++roots;
                }
            } else {
                if (stack.empty()) {
                    ++roots;
                }
                stack.push_back(name);
            }
            i = p;
            continue;
        }
        if (c == '>') {
            return fail("stray '>' at offset " + std::to_string(i));
        }
        if (c == '&') {
            std::size_t p = i + 1;
            std::string entity;
            while (p < n && text[p] != ';' && entity.size() < 12) {
                entity.push_back(text[p]);
                ++p;
            }
            if (p >= n || text[p] != ';') {
                return fail("unterminated entity at offset " + std::to_string(i));
            }
            const bool named = entity == "amp" || entity == "lt" || entity == "gt" ||
                               entity == "quot" || entity == "apos";
            const bool numeric = entity.size() > 1 && entity[0] == '#';
            if (!named && !numeric) {
                return fail("unknown entity &" + entity + ";");
            }
            i = p + 1;
            continue;
        }
        if (!stack.empty() || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        return fail("text content outside the root element at offset " + std::to_string(i));
    }
    if (!stack.empty()) {
        return fail("unclosed tag <" + stack.back() + ">");
    }
    if (roots != 1) {
        return fail("expected exactly one root element, found " + std::to_string(roots));
    }
    return XmlCheckResult{};
}

}  // namespace testsupport

#include <doctest.h>

#include <string>

#include "vibesift/unicode.hpp"

namespace uc = vibesift::unicode;

TEST_CASE("decode rejects invalid byte sequences") {
    CHECK_FALSE(uc::is_valid_utf8("\xFF"));
    CHECK_FALSE(uc::is_valid_utf8("\xC0\xAF"));          // overlong
    CHECK_FALSE(uc::is_valid_utf8("\xE0\x80\x80"));      // overlong
    CHECK_FALSE(uc::is_valid_utf8("\xED\xA0\x80"));      // surrogate
    CHECK_FALSE(uc::is_valid_utf8("\xF0\x9F\x92"));      // truncated
    CHECK_FALSE(uc::is_valid_utf8("abc\x80"));           // stray continuation
    CHECK(uc::is_valid_utf8(""));
    CHECK(uc::is_valid_utf8("plain ascii"));
    CHECK(uc::is_valid_utf8("caf\xC3\xA9 \xF0\x9F\x92\x89"));
}

TEST_CASE("encode/decode round trip") {
    const std::string original = "A\xC3\xA9\xE2\x82\xAC\xF0\x9F\x92\x89";
    const auto cps = uc::decode_utf8(original);
    REQUIRE(cps.has_value());
    CHECK(cps->size() == 4);
    CHECK(uc::encode_utf8(*cps) == original);
    CHECK(uc::length(original) == 4);
}

TEST_CASE("case mapping covers the supported blocks") {
    CHECK(uc::to_lower(U'A') == U'a');
    CHECK(uc::to_lower(U'Z') == U'z');
    CHECK(uc::to_lower(0x00C9) == 0x00E9);  // E acute
    CHECK(uc::to_lower(0x00D7) == 0x00D7);  // multiplication sign untouched
    CHECK(uc::to_lower(0x0100) == 0x0101);  // A macron
    CHECK(uc::to_lower(0x0139) == 0x013A);  // L acute
    CHECK(uc::to_lower(0x0178) == 0x00FF);  // Y diaeresis
    CHECK(uc::to_lower(0x0391) == 0x03B1);  // Alpha
    CHECK(uc::to_lower(0x0410) == 0x0430);  // Cyrillic A
    CHECK(uc::to_lower(0x0401) == 0x0451);  // Io
    CHECK(uc::to_upper(0x03C2) == 0x03A3);  // final sigma
    for (char32_t cp = U'A'; cp <= U'Z'; ++cp) {
        CHECK(uc::to_upper(uc::to_lower(cp)) == cp);
    }
    CHECK(uc::is_upper(U'Q'));
    CHECK_FALSE(uc::is_upper(U'q'));
    CHECK_FALSE(uc::is_upper(U'!'));
    CHECK(uc::fold_lower("VACCINE") == "vaccine");
    CHECK(uc::fold_lower("\xC3\x89T\xC3\x89") == "\xC3\xA9t\xC3\xA9");
}

TEST_CASE("character classes") {
    CHECK(uc::is_space(U' '));
    CHECK(uc::is_space(0x00A0));
    CHECK(uc::is_space(0x2003));
    CHECK_FALSE(uc::is_space(U'x'));
    CHECK(uc::is_punct(U'!'));
    CHECK(uc::is_punct(0x2019));  // curly apostrophe
    CHECK(uc::is_punct(0x2026));  // ellipsis
    CHECK_FALSE(uc::is_punct(U'a'));
    CHECK(uc::is_digit(U'7'));
    CHECK(uc::is_letter(U'k'));
    CHECK(uc::is_letter(0x00E9));
    CHECK_FALSE(uc::is_letter(U'#'));
}

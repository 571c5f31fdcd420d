#include "doctest.h"

#include <string>

#include "colex/text.hpp"

using namespace colex;

TEST_CASE("trim and split") {
  CHECK(trim("  a b \t") == "a b");
  CHECK(trim("") == "");
  CHECK(trim(" \t\r\n") == "");
  auto parts = split_view("a\tb\t\tc", '\t');
  REQUIRE(parts.size() == 4);
  CHECK(parts[0] == "a");
  CHECK(parts[2] == "");
  CHECK(split_view("", '\t').size() == 1);
}

TEST_CASE("ascii_lower leaves non-ascii intact") {
  CHECK(ascii_lower("Santa_Claus") == "santa_claus");
  CHECK(ascii_lower("pĀp") == "pĀp");  // non-ASCII byte untouched
  CHECK(ascii_lower("ABC123xyz") == "abc123xyz");
}

TEST_CASE("utf8 round trip") {
  std::string s = "pāp bābā ʃ ˥ 𝄞";
  CHECK(utf8_encode(utf8_decode(s)) == s);
}

TEST_CASE("nfc composes decomposed Latin") {
  // a + combining macron -> ā
  std::string decomposed = "p";
  decomposed += "a";
  decomposed += "\xCC\x84";  // U+0304
  decomposed += "p";
  CHECK(nfc(decomposed) == "pāp");
  // already composed text passes through unchanged
  CHECK(nfc("pāp") == "pāp");
  CHECK(nfc("pāp") == nfc(nfc("pāp")));
  // plain ascii untouched
  CHECK(nfc("papa") == "papa");
}

TEST_CASE("nfc reorders marks by combining class before composing") {
  // c + combining acute (ccc 230) + combining cedilla (ccc 202): canonical
  // order puts the cedilla first, then both compose into U+1E09 c-cedilla-
  // acute? No precomposed for that pair chain beyond ç, so expect ç + acute.
  std::string s = "c";
  s += "\xCC\x81";  // U+0301 acute (230)
  s += "\xCC\xA7";  // U+0327 cedilla (202)
  std::string composed = nfc(s);
  // cedilla sorts first, composes to ç; acute remains as a combining mark
  std::string expected = "ç";
  expected += "\xCC\x81";
  CHECK(composed == expected);
}

TEST_CASE("nfc handles multiple diacritics") {
  CHECK(nfc(std::string("u") + "\xCC\x88") == "ü");
  CHECK(nfc(std::string("n") + "\xCC\x83") == "ñ");
  CHECK(nfc(std::string("s") + "\xCC\x8C") == "š");
  CHECK(nfc(std::string("a") + "\xCC\xA8") == "ą");
}

TEST_CASE("fnv1a64 known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("hello") != fnv1a64("hellp"));
}

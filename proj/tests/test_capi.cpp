// Exercises the shared library through its C surface only.
#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "perfembed/perfembed.h"

namespace {

struct Collector {
  std::vector<std::string> items;
  static int word_cb(const char* w, void* ctx) {
    static_cast<Collector*>(ctx)->items.emplace_back(w);
    return 0;
  }
  static void line_cb(const char* l, void* ctx) {
    static_cast<Collector*>(ctx)->items.emplace_back(l);
  }
};

pe_oracle* make_c3() {
  const char* words[] = {"000", "111"};
  pe_oracle* o = nullptr;
  REQUIRE(pe_oracle_from_words(3, words, 2, &o) == PE_OK);
  REQUIRE(o != nullptr);
  return o;
}

}  // namespace

TEST_CASE("c api: oracle construction and properties") {
  pe_oracle* o = make_c3();
  CHECK(pe_oracle_m(o) == 3);
  CHECK(pe_oracle_n(o) == 7);
  CHECK(pe_oracle_seed_size(o) == 2);

  char buf[64];
  CHECK(pe_oracle_offset(o, buf, sizeof buf) == PE_OK);
  CHECK(std::string(buf) == "000");
  CHECK(pe_oracle_code_size(o, buf, sizeof buf) == PE_OK);
  CHECK(std::string(buf) == "16");

  char tiny[2];
  CHECK(pe_oracle_offset(o, tiny, sizeof tiny) == PE_ERR_ARG);
  pe_oracle_free(o);
}

TEST_CASE("c api: invalid seeds surface messages") {
  const char* words[] = {"000", "110"};
  pe_oracle* o = nullptr;
  CHECK(pe_oracle_from_words(3, words, 2, &o) == PE_ERR_INVALID);
  CHECK(o == nullptr);
  CHECK(std::string(pe_last_error()).find("000") != std::string::npos);
  CHECK(std::string(pe_last_error()).find("110") != std::string::npos);

  CHECK(pe_oracle_from_file("/nonexistent.code", &o) == PE_ERR_IO);
  CHECK(pe_oracle_from_words(3, nullptr, 0, &o) == PE_ERR_ARG);
}

TEST_CASE("c api: member and decode") {
  pe_oracle* o = make_c3();
  int in = -1;
  CHECK(pe_member(o, "1110000", &in) == PE_OK);
  CHECK(in == 1);
  CHECK(pe_member(o, "1110001", &in) == PE_OK);
  CHECK(in == 0);
  CHECK(pe_member(o, "111", &in) == PE_ERR_INVALID);

  char buf[8];
  uint32_t flipped = 99;
  CHECK(pe_decode(o, "0110000", buf, sizeof buf, &flipped) == PE_OK);
  CHECK(std::string(buf) == "1110000");
  CHECK(flipped == 1);
  CHECK(pe_decode(o, "1110000", buf, sizeof buf, &flipped) == PE_OK);
  CHECK(flipped == 0);
  CHECK(pe_decode(o, "0110000", buf, 4, nullptr) == PE_ERR_ARG);
  pe_oracle_free(o);
}

TEST_CASE("c api: enumerate and project") {
  pe_oracle* o = make_c3();
  Collector words;
  CHECK(pe_enumerate(o, 4, Collector::word_cb, &words) == PE_OK);
  CHECK(words.items.size() == 16);
  CHECK(std::count(words.items.begin(), words.items.end(), "1110000") == 1);

  Collector seed;
  CHECK(pe_project(o, Collector::word_cb, &seed) == PE_OK);
  CHECK(seed.items == std::vector<std::string>{"000", "111"});
  pe_oracle_free(o);

  const char* big[] = {"00000", "11100"};
  pe_oracle* o5 = nullptr;
  REQUIRE(pe_oracle_from_words(5, big, 2, &o5) == PE_OK);
  Collector none;
  CHECK(pe_enumerate(o5, 4, Collector::word_cb, &none) == PE_ERR_LIMIT);
  pe_oracle_free(o5);
}

TEST_CASE("c api: verification") {
  pe_oracle* o = make_c3();
  Collector rep;
  CHECK(pe_verify(o, PE_VERIFY_EXHAUSTIVE, 0, 2, Collector::line_cb, &rep) ==
        PE_OK);
  CHECK(!rep.items.empty());

  // a tampered dump: drop one codeword
  Collector words;
  pe_enumerate(o, 4, Collector::word_cb, &words);
  words.items.pop_back();
  std::vector<const char*> ptrs;
  for (const auto& s : words.items) ptrs.push_back(s.c_str());
  Collector dump_rep;
  CHECK(pe_verify_dump_words(o, ptrs.data(), ptrs.size(), 1, Collector::line_cb,
                             &dump_rep) == PE_ERR_VERIFY);
  bool saw_undercovered = false;
  for (const auto& line : dump_rep.items)
    if (line.find("under-covered") != std::string::npos) saw_undercovered = true;
  CHECK(saw_undercovered);

  const char* mixed[] = {"0000000", "000"};
  CHECK(pe_verify_dump_words(o, mixed, 2, 1, nullptr, nullptr) ==
        PE_ERR_INVALID);
  pe_oracle_free(o);
}

TEST_CASE("c api: triple systems") {
  const uint32_t triples[][3] = {{1, 2, 3}};
  pe_sts* in = nullptr;
  REQUIRE(pe_sts_from_triples(3, triples, 1, &in) == PE_OK);
  CHECK(pe_sts_v(in) == 3);
  CHECK(pe_sts_size(in) == 1);

  char note[160] = {0};
  pe_sts* out = nullptr;
  REQUIRE(pe_sts_embed(in, &out, note, sizeof note) == PE_OK);
  CHECK(pe_sts_v(out) == 7);
  CHECK(pe_sts_size(out) == 7);
  CHECK(std::strlen(note) > 0);

  uint32_t t[3];
  CHECK(pe_sts_triple(out, 0, t) == PE_OK);
  CHECK((t[0] == 1 && t[1] == 2 && t[2] == 3));
  CHECK(pe_sts_triple(out, 99, t) == PE_ERR_ARG);

  Collector rep;
  CHECK(pe_sts_check(out, 1, Collector::line_cb, &rep) == PE_OK);

  pe_sts_free(out);
  pe_sts_free(in);

  // doubly covered pair: embedding refuses, partial check fails
  const uint32_t bad[][3] = {{1, 2, 3}, {1, 2, 4}};
  pe_sts* bad_sts = nullptr;
  REQUIRE(pe_sts_from_triples(4, bad, 2, &bad_sts) == PE_OK);
  pe_sts* none = nullptr;
  CHECK(pe_sts_embed(bad_sts, &none, nullptr, 0) == PE_ERR_INVALID);
  Collector bad_rep;
  CHECK(pe_sts_check(bad_sts, 0, Collector::line_cb, &bad_rep) == PE_ERR_VERIFY);
  pe_sts_free(bad_sts);
}

TEST_CASE("c api: extraction needs the zero word") {
  const char* words[] = {"101", "010"};
  pe_oracle* o = nullptr;
  REQUIRE(pe_oracle_from_words(3, words, 2, &o) == PE_OK);
  pe_sts* sts = nullptr;
  CHECK(pe_sts_extract(o, &sts) == PE_ERR_INVALID);
  pe_oracle_free(o);
}

TEST_CASE("c api: version string") {
  CHECK(std::strlen(pe_version()) > 0);
}

#include "perfembed/perfembed.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "bruteforce.hpp"
#include "embed.hpp"
#include "errors.hpp"
#include "steiner.hpp"
#include "textio.hpp"
#include "verify.hpp"

using namespace perfembed;

struct pe_oracle {
  Oracle o;
};

struct pe_sts {
  TripleSystem ts;
};

namespace {

thread_local std::string g_last_error;

// Thrown from a word callback wrapper to end a stream early.
struct StopStream {};

pe_status set_error(pe_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

template <class Fn>
pe_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    return set_error(PE_ERR_IO, e.what());
  } catch (const LimitExceeded& e) {
    return set_error(PE_ERR_LIMIT, e.what());
  } catch (const InvalidInput& e) {
    return set_error(PE_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PE_ERR_INTERNAL, e.what());
  }
}

pe_status write_string(const std::string& s, char* buf, size_t cap) {
  if (!buf || cap <= s.size())
    return set_error(PE_ERR_ARG, "output buffer too small (need " +
                                     std::to_string(s.size() + 1) + " bytes)");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return PE_OK;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

pe_status emit_report(const VerifyReport& rep, pe_line_cb cb, void* ctx) {
  if (cb)
    for (const std::string& line : rep.lines) cb(line.c_str(), ctx);
  if (rep.pass) return PE_OK;
  return set_error(PE_ERR_VERIFY, "verification failed");
}

pe_status make_oracle(SeedCode seed, pe_oracle** out) {
  *out = new pe_oracle{Oracle(std::move(seed))};
  return PE_OK;
}

pe_status sts_report(const TripleSystem& ts, bool complete, pe_line_cb cb,
                     void* ctx) {
  const StsReport rep = verify_sts(ts, complete);
  if (cb) {
    std::ostringstream os;
    os << (rep.valid ? "[PASS] " : "[FAIL] ") << "pair coverage ("
       << (complete ? "complete" : "partial") << " mode): " << rep.pairs_total
       << " pairs, " << rep.covered_once << " covered once";
    if (complete) os << ", " << rep.uncovered << " uncovered";
    os << ", " << rep.overcovered << " over-covered";
    cb(os.str().c_str(), ctx);
    for (const PairViolation& s : rep.samples) {
      std::ostringstream line;
      line << "       pair {" << s.a << "," << s.b << "} covered " << s.count
           << " times";
      cb(line.str().c_str(), ctx);
    }
  }
  if (rep.valid) return PE_OK;
  return set_error(PE_ERR_VERIFY, "pair coverage check failed");
}

}  // namespace

extern "C" {

const char* pe_version(void) { return "1.0.0"; }

const char* pe_last_error(void) { return g_last_error.c_str(); }

pe_status pe_oracle_from_file(const char* path, pe_oracle** out) {
  if (!path || !out) return set_error(PE_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    const CodeFile cf = read_code_file(path);
    return make_oracle(validate_seed(cf.m, cf.words), out);
  });
}

pe_status pe_oracle_from_words(uint32_t m, const char* const* words,
                               size_t count, pe_oracle** out) {
  if (!words || !out) return set_error(PE_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<Word> parsed;
    parsed.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!words[i]) return set_error(PE_ERR_ARG, "null word in seed list");
      parsed.push_back(Word::parse(words[i]));
    }
    return make_oracle(validate_seed(m, parsed), out);
  });
}

void pe_oracle_free(pe_oracle* oracle) { delete oracle; }

uint32_t pe_oracle_m(const pe_oracle* oracle) { return oracle ? oracle->o.m() : 0; }

uint32_t pe_oracle_n(const pe_oracle* oracle) { return oracle ? oracle->o.n() : 0; }

size_t pe_oracle_seed_size(const pe_oracle* oracle) {
  return oracle ? oracle->o.seed().size() : 0;
}

pe_status pe_oracle_offset(const pe_oracle* oracle, char* buf, size_t cap) {
  if (!oracle) return set_error(PE_ERR_ARG, "null oracle handle");
  return write_string(
      Word::from_value(oracle->o.m(), oracle->o.seed().offset).str(), buf, cap);
}

pe_status pe_oracle_code_size(const pe_oracle* oracle, char* buf, size_t cap) {
  if (!oracle) return set_error(PE_ERR_ARG, "null oracle handle");
  const uint32_t k = oracle->o.n() - oracle->o.m();
  std::ostringstream os;
  if (k <= 63)
    os << (std::uint64_t{1} << k);
  else
    os << "2^" << k;
  return write_string(os.str(), buf, cap);
}

pe_status pe_member(const pe_oracle* oracle, const char* word, int* result) {
  if (!oracle || !word || !result) return set_error(PE_ERR_ARG, "null argument");
  return guarded([&] {
    *result = oracle->o.is_member(Word::parse(word)) ? 1 : 0;
    return PE_OK;
  });
}

pe_status pe_decode(const pe_oracle* oracle, const char* word, char* buf,
                    size_t cap, uint32_t* flipped_pos) {
  if (!oracle || !word) return set_error(PE_ERR_ARG, "null argument");
  return guarded([&] {
    const Oracle::DecodeResult res = oracle->o.decode_flip(Word::parse(word));
    if (flipped_pos) *flipped_pos = res.flipped_pos;
    return write_string(res.codeword.str(), buf, cap);
  });
}

pe_status pe_enumerate(const pe_oracle* oracle, uint32_t enum_limit,
                       pe_word_cb cb, void* ctx) {
  if (!oracle || !cb) return set_error(PE_ERR_ARG, "null argument");
  return guarded([&] {
    try {
      oracle->o.enumerate(enum_limit, [&](const Word& w) {
        if (cb(w.str().c_str(), ctx) != 0) throw StopStream{};
      });
    } catch (const StopStream&) {
    }
    return PE_OK;
  });
}

pe_status pe_project(const pe_oracle* oracle, pe_word_cb cb, void* ctx) {
  if (!oracle || !cb) return set_error(PE_ERR_ARG, "null argument");
  return guarded([&] {
    for (std::uint32_t v : oracle->o.project()) {
      if (cb(Word::from_value(oracle->o.m(), v).str().c_str(), ctx) != 0) break;
    }
    return PE_OK;
  });
}

pe_status pe_verify(const pe_oracle* oracle, pe_verify_level level,
                    uint64_t rng_seed, int threads, pe_line_cb cb, void* ctx) {
  if (!oracle) return set_error(PE_ERR_ARG, "null oracle handle");
  return guarded([&] {
    VerifyLevel lvl = VerifyLevel::Fast;
    switch (level) {
      case PE_VERIFY_FAST:
        lvl = VerifyLevel::Fast;
        break;
      case PE_VERIFY_EXHAUSTIVE:
        lvl = VerifyLevel::Exhaustive;
        break;
      case PE_VERIFY_M5_SWEEP:
        lvl = VerifyLevel::M5Sweep;
        break;
      default:
        return set_error(PE_ERR_ARG, "unknown verification level");
    }
    return emit_report(run_verify(oracle->o, lvl, rng_seed,
                                  resolve_threads(threads)),
                       cb, ctx);
  });
}

pe_status pe_verify_dump_words(const pe_oracle* oracle,
                               const char* const* words, size_t count,
                               int threads, pe_line_cb cb, void* ctx) {
  if (!words) return set_error(PE_ERR_ARG, "null word list");
  return guarded([&] {
    std::vector<Word> dump;
    dump.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!words[i]) return set_error(PE_ERR_ARG, "null word in dump list");
      dump.push_back(Word::parse(words[i]));
    }
    return emit_report(verify_dump_words(dump, oracle ? &oracle->o : nullptr,
                                         resolve_threads(threads)),
                       cb, ctx);
  });
}

pe_status pe_verify_dump_file(const pe_oracle* oracle, const char* path,
                              int threads, pe_line_cb cb, void* ctx) {
  if (!path) return set_error(PE_ERR_ARG, "null path");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dump file: " + std::string(path));
    const std::vector<Word> dump = parse_word_lines(in, path);
    return emit_report(verify_dump_words(dump, oracle ? &oracle->o : nullptr,
                                         resolve_threads(threads)),
                       cb, ctx);
  });
}

pe_status pe_sts_from_file(const char* path, pe_sts** out) {
  if (!path || !out) return set_error(PE_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pe_sts{read_triples_file(path)};
    return PE_OK;
  });
}

pe_status pe_sts_from_triples(uint32_t v, const uint32_t (*triples)[3],
                              size_t count, pe_sts** out) {
  if (!out || (count && !triples)) return set_error(PE_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    TripleSystem ts;
    ts.v = v;
    ts.triples.reserve(count);
    for (size_t i = 0; i < count; ++i)
      ts.triples.push_back({triples[i][0], triples[i][1], triples[i][2]});
    ts.normalize();
    // Surface malformed triples now rather than on first use.
    verify_sts(ts, false);
    *out = new pe_sts{std::move(ts)};
    return PE_OK;
  });
}

void pe_sts_free(pe_sts* sts) { delete sts; }

uint32_t pe_sts_v(const pe_sts* sts) { return sts ? sts->ts.v : 0; }

size_t pe_sts_size(const pe_sts* sts) { return sts ? sts->ts.triples.size() : 0; }

pe_status pe_sts_triple(const pe_sts* sts, size_t idx, uint32_t out[3]) {
  if (!sts || !out) return set_error(PE_ERR_ARG, "null argument");
  if (idx >= sts->ts.triples.size())
    return set_error(PE_ERR_ARG, "triple index out of range");
  for (int i = 0; i < 3; ++i) out[i] = sts->ts.triples[idx][i];
  return PE_OK;
}

pe_status pe_sts_to_file(const pe_sts* sts, const char* path,
                         const char* comment) {
  if (!sts || !path) return set_error(PE_ERR_ARG, "null argument");
  return guarded([&] {
    std::vector<std::string> comments;
    if (comment) comments.emplace_back(comment);
    write_triples_file(path, sts->ts, comments);
    return PE_OK;
  });
}

pe_status pe_sts_check(const pe_sts* sts, int complete, pe_line_cb cb,
                       void* ctx) {
  if (!sts) return set_error(PE_ERR_ARG, "null triple-system handle");
  return guarded([&] { return sts_report(sts->ts, complete != 0, cb, ctx); });
}

pe_status pe_sts_embed(const pe_sts* sts, pe_sts** out, char* note_buf,
                       size_t note_cap) {
  if (!sts || !out) return set_error(PE_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    EmbedStsResult res = embed_partial_sts(sts->ts);
    if (note_buf && note_cap) {
      std::snprintf(note_buf, note_cap, "%s", res.note.c_str());
    }
    *out = new pe_sts{std::move(res.sts)};
    return PE_OK;
  });
}

pe_status pe_sts_extract(const pe_oracle* oracle, pe_sts** out) {
  if (!oracle || !out) return set_error(PE_ERR_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pe_sts{extract_sts(oracle->o)};
    return PE_OK;
  });
}

}  // extern "C"

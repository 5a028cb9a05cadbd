// perfembed command-line tool. Talks to the library exclusively through the
// C interface in perfembed/perfembed.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perfembed/perfembed.h"

namespace {

// Exit codes: 0 success, 1 I/O, 2 invalid input, 3 verification failure.
int exit_code_for(pe_status st) {
  switch (st) {
    case PE_OK:
      return 0;
    case PE_ERR_IO:
      return 1;
    case PE_ERR_VERIFY:
      return 3;
    case PE_ERR_INVALID:
    case PE_ERR_LIMIT:
    case PE_ERR_ARG:
      return 2;
    case PE_ERR_INTERNAL:
    default:
      return 1;
  }
}

int fail(pe_status st) {
  std::cerr << "error: " << pe_last_error() << "\n";
  return exit_code_for(st);
}

struct OracleHandle {
  pe_oracle* ptr = nullptr;
  ~OracleHandle() { pe_oracle_free(ptr); }
};

struct StsHandle {
  pe_sts* ptr = nullptr;
  ~StsHandle() { pe_sts_free(ptr); }
};

void print_line(const char* line, void*) { std::cout << line << "\n"; }

int count_word(const char*, void* ctx) {
  ++*static_cast<std::uint64_t*>(ctx);
  return 0;
}

int write_word(const char* word, void* ctx) {
  auto& out = *static_cast<std::ostream*>(ctx);
  out << word << '\n';
  return out ? 0 : 1;
}

std::string strip_line(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int default_threads() {
  if (const char* env = std::getenv("PERFEMBED_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 0;  // library picks the hardware default
}

std::string describe(const pe_oracle* o) {
  char offset[24], size[32];
  pe_oracle_offset(o, offset, sizeof offset);
  pe_oracle_code_size(o, size, sizeof size);
  std::string out = "m=" + std::to_string(pe_oracle_m(o)) +
                    " n=" + std::to_string(pe_oracle_n(o)) +
                    " |C|=" + std::to_string(pe_oracle_seed_size(o)) +
                    " offset=" + offset;
  if (pe_oracle_m(o) <= 4) {
    std::uint64_t count = 0;
    pe_enumerate(o, 4, count_word, &count);
    out += " |P|=" + std::to_string(count) + " (enumerated)";
  } else {
    out += " |P|=" + std::string(size) + " (formula 2^n/(n+1))";
  }
  return out;
}

int run_embed(const std::string& code_path, const std::string& dump,
              std::uint32_t enum_limit) {
  OracleHandle oracle;
  if (pe_status st = pe_oracle_from_file(code_path.c_str(), &oracle.ptr))
    return fail(st);
  const std::string summary = describe(oracle.ptr);
  if (dump.empty()) {
    std::cout << summary << "\n";
    return 0;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (dump != "-") {
    std::cout << summary << "\n";
    file.open(dump);
    if (!file) {
      std::cerr << "error: cannot open dump file: " << dump << "\n";
      return 1;
    }
    out = &file;
  }
  *out << "# " << summary << "\n";
  if (pe_status st = pe_enumerate(oracle.ptr, enum_limit, write_word, out))
    return fail(st);
  out->flush();
  if (!*out) {
    std::cerr << "error: failed writing dump\n";
    return 1;
  }
  return 0;
}

int run_member(const std::string& code_path, const std::string& word) {
  OracleHandle oracle;
  if (pe_status st = pe_oracle_from_file(code_path.c_str(), &oracle.ptr))
    return fail(st);
  int is_member = 0;
  if (pe_status st = pe_member(oracle.ptr, word.c_str(), &is_member))
    return fail(st);
  std::cout << (is_member ? "IN" : "OUT") << "\n";
  return 0;
}

int run_decode(const std::string& code_path, const std::string& word) {
  OracleHandle oracle;
  if (pe_status st = pe_oracle_from_file(code_path.c_str(), &oracle.ptr))
    return fail(st);
  std::vector<char> buf(pe_oracle_n(oracle.ptr) + 1);
  std::uint32_t flipped = 0;
  if (pe_status st =
          pe_decode(oracle.ptr, word.c_str(), buf.data(), buf.size(), &flipped))
    return fail(st);
  std::cout << buf.data() << " (flipped position ";
  if (flipped)
    std::cout << flipped;
  else
    std::cout << "none";
  std::cout << ")\n";
  return 0;
}

int run_verify(const std::string& code_path, const std::string& level,
               const std::string& dump, std::uint64_t rng_seed, int threads) {
  OracleHandle oracle;
  if (pe_status st = pe_oracle_from_file(code_path.c_str(), &oracle.ptr))
    return fail(st);

  pe_status st = PE_OK;
  if (!dump.empty()) {
    if (dump == "-") {
      std::vector<std::string> lines;
      for (std::string raw; std::getline(std::cin, raw);) {
        std::string s = strip_line(raw);
        if (!s.empty()) lines.push_back(std::move(s));
      }
      std::vector<const char*> ptrs;
      ptrs.reserve(lines.size());
      for (const auto& s : lines) ptrs.push_back(s.c_str());
      st = pe_verify_dump_words(oracle.ptr, ptrs.data(), ptrs.size(), threads,
                                print_line, nullptr);
    } else {
      st = pe_verify_dump_file(oracle.ptr, dump.c_str(), threads, print_line,
                               nullptr);
    }
  } else {
    pe_verify_level lvl = PE_VERIFY_FAST;
    if (level == "exhaustive")
      lvl = PE_VERIFY_EXHAUSTIVE;
    else if (level == "m5-sweep")
      lvl = PE_VERIFY_M5_SWEEP;
    st = pe_verify(oracle.ptr, lvl, rng_seed, threads, print_line, nullptr);
  }

  if (st == PE_OK) {
    std::cout << "VERIFY OK\n";
    return 0;
  }
  if (st == PE_ERR_VERIFY) {
    std::cout << "VERIFY FAILED\n";
    return 3;
  }
  return fail(st);
}

int write_sts(pe_sts* sts, const std::string& out_path, const std::string& note) {
  if (out_path == "-") {
    if (!note.empty()) std::cout << "# " << note << "\n";
    std::cout << "v=" << pe_sts_v(sts) << "\n";
    std::uint32_t t[3];
    for (std::size_t i = 0; i < pe_sts_size(sts); ++i) {
      pe_sts_triple(sts, i, t);
      std::cout << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    return 0;
  }
  if (pe_status st = pe_sts_to_file(sts, out_path.c_str(),
                                    note.empty() ? nullptr : note.c_str()))
    return fail(st);
  if (!note.empty()) std::cout << note << "\n";
  std::cout << "wrote " << pe_sts_size(sts) << " triples to " << out_path << "\n";
  return 0;
}

int run_sts_embed(const std::string& triples_path, const std::string& out_path) {
  StsHandle in, out;
  if (pe_status st = pe_sts_from_file(triples_path.c_str(), &in.ptr))
    return fail(st);
  char note[160] = {0};
  if (pe_status st = pe_sts_embed(in.ptr, &out.ptr, note, sizeof note))
    return fail(st);
  return write_sts(out.ptr, out_path, note);
}

int run_sts_extract(const std::string& code_path, const std::string& out_path) {
  OracleHandle oracle;
  if (pe_status st = pe_oracle_from_file(code_path.c_str(), &oracle.ptr))
    return fail(st);
  StsHandle out;
  if (pe_status st = pe_sts_extract(oracle.ptr, &out.ptr)) return fail(st);
  const std::string note = "triple system on " +
                           std::to_string(pe_sts_v(out.ptr)) + " points, " +
                           std::to_string(pe_sts_size(out.ptr)) + " triples";
  return write_sts(out.ptr, out_path, note);
}

int run_sts_check(const std::string& triples_path, const std::string& mode) {
  StsHandle sts;
  if (pe_status st = pe_sts_from_file(triples_path.c_str(), &sts.ptr))
    return fail(st);
  const pe_status st =
      pe_sts_check(sts.ptr, mode == "complete" ? 1 : 0, print_line, nullptr);
  if (st == PE_OK) {
    std::cout << "CHECK OK\n";
    return 0;
  }
  if (st == PE_ERR_VERIFY) {
    std::cout << "CHECK FAILED\n";
    return 3;
  }
  return fail(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "perfembed: embed a binary 1-error-correcting code of length m in a"
      " 1-error-correcting perfect code of length 2^m - 1"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pe_version()));

  std::string code_path, triples_path, word, dump, out_path = "-";
  std::string level = "fast", mode = "complete";
  std::uint32_t enum_limit = 4;
  std::uint64_t rng_seed = 0;
  int threads = default_threads();

  auto* embed = app.add_subcommand(
      "embed", "Build the embedding and print its parameters");
  embed->add_option("code", code_path, "seed code file")->required();
  embed->add_option("--dump", dump,
                    "write all codewords, one per line ('-' for stdout)");
  embed->add_option("--enum-limit", enum_limit,
                    "largest m the dump may enumerate (hard cap 5)");

  auto* member = app.add_subcommand("member", "Test codeword membership");
  member->add_option("code", code_path, "seed code file")->required();
  member->add_option("--word", word, "length-n word to test")->required();

  auto* decode = app.add_subcommand("decode", "Correct up to one error");
  decode->add_option("code", code_path, "seed code file")->required();
  decode->add_option("--word", word, "length-n word to decode")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("code", code_path, "seed code file")->required();
  verify->add_option("--level", level, "fast | exhaustive | m5-sweep")
      ->check(CLI::IsMember({"fast", "exhaustive", "m5-sweep"}));
  verify->add_option("--dump", dump,
                     "verify an explicit codeword dump ('-' for stdin)");
  verify->add_option("--seed", rng_seed, "RNG seed for sampled checks");
  verify->add_option("--threads", threads, "worker threads for sweeps");

  auto* sts = app.add_subcommand("sts", "Triple-system operations");
  sts->require_subcommand(1);
  auto* sts_embed =
      sts->add_subcommand("embed", "Embed a partial system in a complete one");
  sts_embed->add_option("triples", triples_path, "triple file")->required();
  sts_embed->add_option("-o,--out", out_path, "output file ('-' for stdout)");
  auto* sts_extract = sts->add_subcommand(
      "extract", "Extract the triple system of an embedded code");
  sts_extract->add_option("code", code_path, "seed code file")->required();
  sts_extract->add_option("-o,--out", out_path, "output file ('-' for stdout)");
  auto* sts_check = sts->add_subcommand("check", "Check pair coverage");
  sts_check->add_option("triples", triples_path, "triple file")->required();
  sts_check->add_option("--mode", mode, "complete | partial")
      ->check(CLI::IsMember({"complete", "partial"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (embed->parsed()) return run_embed(code_path, dump, enum_limit);
  if (member->parsed()) return run_member(code_path, word);
  if (decode->parsed()) return run_decode(code_path, word);
  if (verify->parsed()) return run_verify(code_path, level, dump, rng_seed, threads);
  if (sts_embed->parsed()) return run_sts_embed(triples_path, out_path);
  if (sts_extract->parsed()) return run_sts_extract(code_path, out_path);
  if (sts_check->parsed()) return run_sts_check(triples_path, mode);
  return 2;
}

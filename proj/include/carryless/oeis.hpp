#pragma once

#include "carryless/bigint.hpp"
#include "carryless/errors.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace carryless::oeis {

enum class Source { Fixture, Cache, Remote, File };

inline std::string source_token(Source s) {
  switch (s) {
    case Source::Fixture: return "fixture";
    case Source::Cache: return "cache";
    case Source::Remote: return "remote";
    case Source::File: return "file";
  }
  return "?";
}

struct BRecord {
  std::int64_t index = 0;
  BigInt value;
  friend bool operator==(const BRecord&, const BRecord&) = default;
};

/// A parsed b-file. Indices increase by exactly 1 from the first record.
struct BFileSeq {
  std::string a_number;
  std::vector<BRecord> records;
  Source source = Source::File;
};

/// "A169887" -> "b169887.txt"
inline std::string bfile_name(std::string_view a_number) {
  bool ok = a_number.size() == 7 && a_number[0] == 'A';
  for (std::size_t i = 1; ok && i < a_number.size(); ++i) ok = a_number[i] >= '0' && a_number[i] <= '9';
  if (!ok) throw usage_error("malformed A-number \"" + std::string(a_number) + "\"");
  return "b" + std::string(a_number.substr(1)) + ".txt";
}

namespace detail {

inline bool parse_int_token(std::string_view tok, BigInt& out) {
  std::size_t i = 0;
  if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) i = 1;
  if (i == tok.size()) return false;
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (tok[j] < '0' || tok[j] > '9') return false;
  }
  out = BigInt(std::string(tok[0] == '+' ? tok.substr(1) : tok));
  return true;
}

}  // namespace detail

/// Parses "<index> <value>" lines. Blank lines and '#' comments are skipped;
/// CRLF and arbitrary spaces/tabs are tolerated.
inline BFileSeq parse_bfile(std::string_view text, std::string a_number = {}) {
  BFileSeq seq;
  seq.a_number = std::move(a_number);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) toks.push_back(line.substr(start, i - start));
    }
    if (toks.empty() || toks[0][0] == '#') continue;

    BigInt idx, val;
    if (toks.size() != 2 || !detail::parse_int_token(toks[0], idx) || !detail::parse_int_token(toks[1], val)) {
      throw parse_error("b-file line " + std::to_string(line_no) + ": malformed record \"" + std::string(line) + "\"");
    }
    auto index = static_cast<std::int64_t>(idx);
    if (!seq.records.empty() && index != seq.records.back().index + 1) {
      throw parse_error("b-file line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                        " does not follow " + std::to_string(seq.records.back().index));
    }
    seq.records.push_back({index, std::move(val)});
  }
  return seq;
}

/// b-file text with LF line endings.
inline std::string render_bfile(std::int64_t offset, const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(offset + static_cast<std::int64_t>(i));
    out += ' ';
    out += values[i].str();
    out += '\n';
  }
  return out;
}

enum class Verdict { Match, Mismatch, Unavailable };

inline std::string verdict_token(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Unavailable: return "unavailable";
  }
  return "?";
}

struct Mismatch {
  std::int64_t index = 0;
  BigInt expected;
  BigInt actual;
};

struct ComparisonReport {
  std::string a_number;
  std::size_t terms_compared = 0;
  std::size_t terms_requested = 0;
  std::optional<Mismatch> first_mismatch;
  Verdict verdict = Verdict::Unavailable;
  std::string note;  ///< why the report is unavailable, if it is

  std::string summary() const {
    std::string s = a_number + ": " + verdict_token(verdict) + " (" + std::to_string(terms_compared) + "/" +
                    std::to_string(terms_requested) + " terms)";
    if (first_mismatch) {
      s += " first mismatch at n=" + std::to_string(first_mismatch->index) + ": expected " +
           first_mismatch->expected.str() + ", got " + first_mismatch->actual.str();
    }
    if (!note.empty()) s += " " + note;
    return s;
  }
};

inline ComparisonReport unavailable_report(std::string a_number, std::size_t requested, std::string why) {
  ComparisonReport r;
  r.a_number = std::move(a_number);
  r.terms_requested = requested;
  r.verdict = Verdict::Unavailable;
  r.note = std::move(why);
  return r;
}

/// Aligns generated terms (starting at `offset`) with the reference by
/// index and compares up to `min_terms` of them. The verdict is a match only
/// when nothing differs and at least `min_terms` terms were compared.
inline ComparisonReport compare(const std::vector<BigInt>& generated, std::int64_t offset, const BFileSeq& reference,
                                std::size_t min_terms) {
  if (generated.empty()) throw usage_error("nothing generated to compare");
  ComparisonReport r;
  r.a_number = reference.a_number;
  r.terms_requested = min_terms;
  for (const auto& rec : reference.records) {
    if (r.terms_compared == min_terms) break;
    const std::int64_t pos = rec.index - offset;
    if (pos < 0) continue;
    if (pos >= static_cast<std::int64_t>(generated.size())) break;
    ++r.terms_compared;
    if (generated[static_cast<std::size_t>(pos)] != rec.value) {
      r.first_mismatch = Mismatch{rec.index, rec.value, generated[static_cast<std::size_t>(pos)]};
      break;
    }
  }
  r.verdict = (!r.first_mismatch && r.terms_compared >= min_terms) ? Verdict::Match : Verdict::Mismatch;
  return r;
}

inline std::string read_file_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw unavailable_error("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file_bytes(const std::filesystem::path& p, std::string_view bytes) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw unavailable_error("cannot write " + p.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw unavailable_error("short write to " + p.string());
}

/// $CARRYLESS_CACHE_DIR, else $XDG_DATA_HOME/carryless/oeis, else
/// ~/.local/share/carryless/oeis.
inline std::filesystem::path default_cache_dir() {
  if (const char* e = std::getenv("CARRYLESS_CACHE_DIR"); e && *e) return e;
  if (const char* x = std::getenv("XDG_DATA_HOME"); x && *x) return std::filesystem::path(x) / "carryless" / "oeis";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".local" / "share" / "carryless" / "oeis";
  return std::filesystem::path(".carryless") / "oeis";
}

/// Performs one HTTP GET and returns the body; throws unavailable_error.
using RemoteGet = std::function<std::string(const std::string& url)>;

struct FetchConfig {
  std::filesystem::path fixture_dir;
  std::filesystem::path cache_dir = default_cache_dir();
  bool offline = false;
  std::chrono::milliseconds courtesy_delay{1000};
};

/// Resolves b-files from shipped fixtures, then the local cache, then (when
/// online) oeis.org. Remote requests are serialized, spaced by the courtesy
/// delay, and issued at most once per sequence for the fetcher's lifetime.
class Fetcher {
 public:
  explicit Fetcher(FetchConfig config, RemoteGet remote = {})
      : config_(std::move(config)), remote_(std::move(remote)) {}

  static std::string remote_url(std::string_view a_number) {
    return "https://oeis.org/" + std::string(a_number) + "/" + bfile_name(a_number);
  }

  BFileSeq fetch(const std::string& a_number) {
    const std::string name = bfile_name(a_number);
    if (!config_.fixture_dir.empty()) {
      auto p = config_.fixture_dir / name;
      if (std::filesystem::exists(p)) return parsed(read_file_bytes(p), a_number, Source::Fixture);
    }
    const auto cached = config_.cache_dir / name;
    if (std::filesystem::exists(cached)) return parsed(read_file_bytes(cached), a_number, Source::Cache);
    if (config_.offline) throw unavailable_error(a_number + " is not cached and offline mode is on");
    if (!remote_) throw unavailable_error(a_number + " is not cached and no remote transport is configured");

    std::string body;
    {
      std::lock_guard lock(mu_);
      if (!attempted_.insert(a_number).second) {
        throw unavailable_error(a_number + " was already requested from the remote in this run");
      }
      if (last_request_) {
        auto next = *last_request_ + config_.courtesy_delay;
        std::this_thread::sleep_until(next);
      }
      last_request_ = std::chrono::steady_clock::now();
      body = remote_(remote_url(a_number));
    }
    BFileSeq seq = parsed(body, a_number, Source::Remote);
    write_file_bytes(cached, body);
    return seq;
  }

  std::size_t remote_requests() const {
    std::lock_guard lock(mu_);
    return attempted_.size();
  }

  const FetchConfig& config() const noexcept { return config_; }

 private:
  static BFileSeq parsed(const std::string& bytes, const std::string& a_number, Source src) {
    BFileSeq s = parse_bfile(bytes, a_number);
    s.source = src;
    return s;
  }

  FetchConfig config_;
  RemoteGet remote_;
  mutable std::mutex mu_;
  std::set<std::string> attempted_;
  std::optional<std::chrono::steady_clock::time_point> last_request_;
};

}  // namespace carryless::oeis

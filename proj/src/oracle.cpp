#include "primwords/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <future>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "primwords/cutting.hpp"
#include "primwords/enumerate.hpp"
#include "primwords/error.hpp"

namespace primwords {

namespace {

constexpr std::array<Letter, 4> kAlphabet{kA, kAInv, kB, kBInv};
constexpr std::size_t kKeptDisagreements = 16;

// Depth-first extension of `prefix` to exactly `len` letters.
void extend(std::vector<Letter>& prefix, std::size_t len, const std::function<void(const Word&)>& visit) {
  if (prefix.size() == len) {
    visit(Word(prefix));
    return;
  }
  for (const auto& l : kAlphabet) {
    if (!prefix.empty() && prefix.back().cancels(l)) continue;
    prefix.push_back(l);
    extend(prefix, len, visit);
    prefix.pop_back();
  }
}

bool word_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

struct PartialReport {
  std::uint64_t checked = 0;
  std::uint64_t primitives = 0;
  std::uint64_t disagreement_count = 0;
  std::vector<WordDisagreement> disagreements;
};

void check_word(const Word& w, PartialReport& rep) {
  const bool decision = is_primitive(w).primitive;
  const bool simple = strand_diagram(cyclic_reduce(w).core).simple;
  const bool whitehead = whitehead_is_primitive(w);
  ++rep.checked;
  if (whitehead) ++rep.primitives;
  if (decision != simple || decision != whitehead) {
    ++rep.disagreement_count;
    if (rep.disagreements.size() < kKeptDisagreements) rep.disagreements.push_back({w, decision, simple, whitehead});
  }
}

}  // namespace

std::string WhiteheadMove::description() const {
  const char x = moved == Generator::A ? 'A' : 'B';
  const char m = multiplier.symbol();
  std::string image = on_right ? std::string{x, m} : std::string{m, x};
  return std::string(1, x) + "->" + image;
}

Word WhiteheadMove::apply(const Word& w) const {
  std::vector<Letter> raw;
  raw.reserve(w.size() * 2);
  for (const auto& l : w.letters()) {
    if (l.gen != moved) {
      raw.push_back(l);
      continue;
    }
    // x -> x m gives x^-1 -> m^-1 x^-1; x -> m x gives x^-1 -> x^-1 m^-1.
    const bool mult_after = on_right == (l.sign > 0);
    const Letter m = l.sign > 0 ? multiplier : multiplier.inverse();
    if (mult_after) {
      raw.push_back(l);
      raw.push_back(m);
    } else {
      raw.push_back(m);
      raw.push_back(l);
    }
  }
  return Word(raw);
}

const std::vector<WhiteheadMove>& whitehead_moves() {
  static const std::vector<WhiteheadMove> moves = [] {
    std::vector<WhiteheadMove> out;
    for (const Generator moved : {Generator::A, Generator::B}) {
      const Generator other = moved == Generator::A ? Generator::B : Generator::A;
      for (const int sign : {1, -1}) {
        for (const bool right : {true, false}) {
          out.push_back({moved, Letter{other, static_cast<std::int8_t>(sign)}, right});
        }
      }
    }
    return out;
  }();
  return moves;
}

bool whitehead_is_primitive(const Word& w) {
  Word current = cyclic_reduce(w).core;
  bool improved = true;
  while (improved && current.size() > 1) {
    improved = false;
    for (const auto& move : whitehead_moves()) {
      Word image = cyclic_reduce(move.apply(current)).core;
      if (image.size() < current.size()) {
        current = std::move(image);
        improved = true;
        break;
      }
    }
  }
  return current.size() == 1;
}

bool is_generating_pair(const Word& u, const Word& v) {
  static const Word commutator = Word::parse("ABab");
  static const Word commutator_inverse = inverse(commutator);
  const Word c = u * v * inverse(u) * inverse(v);
  if (c.empty()) return false;
  return cyclic_equal(c, commutator) || cyclic_equal(c, commutator_inverse);
}

void for_each_reduced_word(std::size_t max_len, const std::function<void(const Word&)>& visit) {
  std::vector<Letter> prefix;
  for (std::size_t len = 1; len <= max_len; ++len) extend(prefix, len, visit);
}

std::vector<ExtRational> slopes_up_to(std::int64_t bound) {
  std::vector<ExtRational> out;
  for (std::int64_t s = 1; s <= bound; ++s) {
    for (std::int64_t p = 0; p <= s; ++p) {
      if (std::gcd(p, s - p) == 1) out.emplace_back(p, s - p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CrossCheckReport cross_check(std::size_t max_len, std::int64_t pair_bound, unsigned threads) {
  if (max_len > kMaxCrossCheckLength) {
    throw DomainError("cross-check length " + std::to_string(max_len) + " exceeds the limit of " +
                      std::to_string(kMaxCrossCheckLength));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Work units: one per two-letter prefix, each covering lengths 2..max_len.
  std::vector<std::vector<Letter>> prefixes;
  for (const auto& x : kAlphabet) {
    for (const auto& y : kAlphabet) {
      if (!x.cancels(y)) prefixes.push_back({x, y});
    }
  }
  std::vector<PartialReport> partial(prefixes.size());
  PartialReport singles;
  for (const auto& l : kAlphabet) {
    if (max_len >= 1) check_word(Word{l}, singles);
  }
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      std::vector<Letter> prefix = prefixes[i];
      for (std::size_t len = 2; len <= max_len; ++len) {
        extend(prefix, len, [&](const Word& w) { check_word(w, partial[i]); });
      }
    }
  };
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
  for (auto& j : jobs) j.get();

  CrossCheckReport report;
  partial.push_back(std::move(singles));
  for (auto& part : partial) {
    report.checked += part.checked;
    report.primitives += part.primitives;
    report.disagreement_count += part.disagreement_count;
    for (auto& d : part.disagreements) report.disagreements.push_back(std::move(d));
  }
  std::sort(report.disagreements.begin(), report.disagreements.end(),
            [](const WordDisagreement& x, const WordDisagreement& y) { return word_less(x.word, y.word); });
  if (report.disagreements.size() > kKeptDisagreements) report.disagreements.resize(kKeptDisagreements);

  const auto slopes = slopes_up_to(pair_bound);
  std::vector<Word> words;
  words.reserve(slopes.size());
  for (const auto& x : slopes) words.push_back(w_word(x));
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      const bool neighbors = associates(slopes[i], slopes[j]);
      const bool generating = is_generating_pair(words[i], words[j]);
      ++report.pairs_checked;
      if (neighbors) ++report.neighbor_pairs;
      if (neighbors != generating) {
        ++report.pair_disagreement_count;
        if (report.pair_disagreements.size() < kKeptDisagreements) {
          report.pair_disagreements.push_back({slopes[i], slopes[j], neighbors, generating});
        }
      }
    }
  }
  return report;
}

std::string report_json(const CrossCheckReport& r) {
  nlohmann::ordered_json j;
  j["checked"] = r.checked;
  j["primitives"] = r.primitives;
  auto dis = nlohmann::ordered_json::array();
  for (const auto& d : r.disagreements) {
    dis.push_back({{"word", d.word.str()},
                   {"is_primitive", d.decision},
                   {"strands_simple", d.strands_simple},
                   {"whitehead", d.whitehead}});
  }
  j["disagreements"] = std::move(dis);
  j["disagreement_count"] = r.disagreement_count;
  j["pairs_checked"] = r.pairs_checked;
  j["neighbor_pairs"] = r.neighbor_pairs;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& d : r.pair_disagreements) {
    pairs.push_back({{"x", d.x.str()}, {"y", d.y.str()}, {"neighbors", d.neighbors}, {"generating", d.generating}});
  }
  j["pair_disagreements"] = std::move(pairs);
  j["pair_disagreement_count"] = r.pair_disagreement_count;
  return j.dump();
}

}  // namespace primwords

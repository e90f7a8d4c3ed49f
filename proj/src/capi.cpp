#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "primwords.h"
#include "primwords/cutting.hpp"
#include "primwords/enumerate.hpp"
#include "primwords/error.hpp"
#include "primwords/farey.hpp"
#include "primwords/oracle.hpp"
#include "primwords/word.hpp"

struct pw_word {
  primwords::Word value;
};

struct pw_word_list {
  std::vector<pw_word> items;
};

struct pw_diagram {
  primwords::StrandDiagram value;
};

namespace {

using namespace primwords;

thread_local std::string g_last_error;

pw_status fail(pw_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <typename F>
pw_status guarded(F&& body) {
  try {
    body();
    return PW_OK;
  } catch (const ParseError& e) {
    return fail(PW_ERR_PARSE, e.what());
  } catch (const DomainError& e) {
    return fail(PW_ERR_DOMAIN, e.what());
  } catch (const OverflowError& e) {
    return fail(PW_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PW_ERR_INTERNAL, "unknown error");
  }
}

#define PW_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(PW_ERR_NULL, "null argument: " #ptr)

ExtRational to_cpp(pw_rational x) { return {x.p, x.q}; }
pw_rational to_c(const ExtRational& x) { return {x.p(), x.q()}; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pw_word* new_word(Word w) { return new pw_word{std::move(w)}; }

template <typename T, typename Src>
pw_status fill(const std::vector<Src>& src, T* out, std::size_t cap, std::size_t* len, T (*conv)(const Src&)) {
  *len = src.size();
  if (cap < src.size()) {
    return fail(PW_ERR_BUFFER, "buffer holds " + std::to_string(cap) + " entries, " + std::to_string(src.size()) +
                                   " needed");
  }
  if (out == nullptr && !src.empty()) return fail(PW_ERR_NULL, "null argument: out");
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = conv(src[i]);
  return PW_OK;
}

pw_rational rational_to_c(const ExtRational& x) { return to_c(x); }
std::int64_t identity_i64(const std::int64_t& v) { return v; }

}  // namespace

extern "C" {

const char* pw_version(void) { return "1.0.0"; }

const char* pw_last_error(void) { return g_last_error.c_str(); }

const char* pw_status_name(pw_status s) {
  switch (s) {
    case PW_OK: return "ok";
    case PW_ERR_PARSE: return "parse error";
    case PW_ERR_DOMAIN: return "domain error";
    case PW_ERR_OVERFLOW: return "overflow";
    case PW_ERR_NULL: return "null argument";
    case PW_ERR_BUFFER: return "buffer too small";
    case PW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pw_string_free(char* s) { std::free(s); }

pw_status pw_rational_parse(const char* text, pw_rational* out) {
  PW_REQUIRE(text);
  PW_REQUIRE(out);
  return guarded([&] { *out = to_c(ExtRational::parse(text)); });
}

pw_status pw_rational_format(pw_rational x, char** out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_cpp(x).str()); });
}

pw_status pw_is_neighbor(pw_rational x, pw_rational y, int* out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = is_neighbor(to_cpp(x), to_cpp(y)) ? 1 : 0; });
}

pw_status pw_determinant(pw_rational x, pw_rational y, int64_t* out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = determinant(to_cpp(x), to_cpp(y)); });
}

pw_status pw_mediant(pw_rational x, pw_rational y, pw_rational* out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = to_c(mediant(to_cpp(x), to_cpp(y))); });
}

pw_status pw_continued_fraction(pw_rational x, int64_t* digits, size_t cap, size_t* len) {
  PW_REQUIRE(len);
  std::vector<std::int64_t> d;
  const pw_status s = guarded([&] { d = continued_fraction(to_cpp(x)).digits(); });
  if (s != PW_OK) return s;
  return fill<int64_t, std::int64_t>(d, digits, cap, len, identity_i64);
}

pw_status pw_approximants(pw_rational x, pw_rational* out, size_t cap, size_t* len) {
  PW_REQUIRE(len);
  std::vector<ExtRational> v;
  const pw_status s = guarded([&] { v = approximants(continued_fraction(to_cpp(x))); });
  if (s != PW_OK) return s;
  return fill<pw_rational, ExtRational>(v, out, cap, len, rational_to_c);
}

pw_status pw_farey_sequence(pw_rational x, pw_rational* out, size_t cap, size_t* len) {
  PW_REQUIRE(len);
  std::vector<ExtRational> v;
  const pw_status s = guarded([&] { v = farey_path(to_cpp(x)).vertices; });
  if (s != PW_OK) return s;
  return fill<pw_rational, ExtRational>(v, out, cap, len, rational_to_c);
}

pw_status pw_farey_level(pw_rational x, int64_t* out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = level(to_cpp(x)); });
}

pw_status pw_distinguished_neighbors(pw_rational x, pw_rational* lo, pw_rational* hi) {
  PW_REQUIRE(lo);
  PW_REQUIRE(hi);
  return guarded([&] {
    const auto [l, h] = distinguished_neighbors(to_cpp(x));
    *lo = to_c(l);
    *hi = to_c(h);
  });
}

pw_status pw_word_parse(const char* text, pw_word** out) {
  PW_REQUIRE(text);
  PW_REQUIRE(out);
  return guarded([&] { *out = new_word(Word::parse(text)); });
}

void pw_word_free(pw_word* w) { delete w; }

pw_status pw_word_clone(const pw_word* w, pw_word** out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  return guarded([&] { *out = new_word(w->value); });
}

pw_status pw_word_text(const pw_word* w, char** out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  return guarded([&] { *out = dup_string(w->value.str()); });
}

pw_status pw_word_length(const pw_word* w, size_t* out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  *out = w->value.size();
  return PW_OK;
}

pw_status pw_word_equal(const pw_word* x, const pw_word* y, int* out) {
  PW_REQUIRE(x);
  PW_REQUIRE(y);
  PW_REQUIRE(out);
  *out = x->value == y->value ? 1 : 0;
  return PW_OK;
}

pw_status pw_word_concat(const pw_word* x, const pw_word* y, pw_word** out) {
  PW_REQUIRE(x);
  PW_REQUIRE(y);
  PW_REQUIRE(out);
  return guarded([&] { *out = new_word(x->value * y->value); });
}

pw_status pw_word_inverse(const pw_word* w, pw_word** out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  return guarded([&] { *out = new_word(inverse(w->value)); });
}

pw_status pw_word_cyclic_reduce(const pw_word* w, pw_word** core, pw_word** conjugator) {
  PW_REQUIRE(w);
  PW_REQUIRE(core);
  PW_REQUIRE(conjugator);
  return guarded([&] {
    auto r = cyclic_reduce(w->value);
    auto* c = new_word(std::move(r.core));
    try {
      *conjugator = new_word(std::move(r.conjugator));
    } catch (...) {
      delete c;
      throw;
    }
    *core = c;
  });
}

pw_status pw_word_is_palindrome(const pw_word* w, int* out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  *out = is_palindrome(w->value) ? 1 : 0;
  return PW_OK;
}

pw_status pw_word_abelianize(const pw_word* w, pw_abelian* out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  const auto img = abelianize(w->value);
  *out = {img.b_sum, img.a_sum};
  return PW_OK;
}

pw_status pw_word_cyclic_equal(const pw_word* x, const pw_word* y, int* out) {
  PW_REQUIRE(x);
  PW_REQUIRE(y);
  PW_REQUIRE(out);
  return guarded([&] { *out = cyclic_equal(x->value, y->value) ? 1 : 0; });
}

void pw_word_list_free(pw_word_list* l) { delete l; }

pw_status pw_word_list_size(const pw_word_list* l, size_t* out) {
  PW_REQUIRE(l);
  PW_REQUIRE(out);
  *out = l->items.size();
  return PW_OK;
}

pw_status pw_word_list_at(const pw_word_list* l, size_t i, const pw_word** out) {
  PW_REQUIRE(l);
  PW_REQUIRE(out);
  if (i >= l->items.size()) {
    return fail(PW_ERR_DOMAIN, "index " + std::to_string(i) + " out of range for list of " +
                                   std::to_string(l->items.size()));
  }
  *out = &l->items[i];
  return PW_OK;
}

pw_status pw_scheme_word(pw_rational x, pw_scheme scheme, pw_word** out) {
  PW_REQUIRE(out);
  return guarded([&] {
    const ExtRational r = to_cpp(x);
    switch (scheme) {
      case PW_SCHEME_W: *out = new_word(w_word(r)); return;
      case PW_SCHEME_E: *out = new_word(e_word(r)); return;
      case PW_SCHEME_CF: *out = new_word(cf_word(r)); return;
    }
    throw DomainError("unknown scheme " + std::to_string(static_cast<int>(scheme)));
  });
}

pw_status pw_v_sequence(pw_rational x, pw_word_list** out) {
  PW_REQUIRE(out);
  return guarded([&] {
    auto list = std::make_unique<pw_word_list>();
    for (auto& w : v_sequence(to_cpp(x))) list->items.push_back({std::move(w)});
    *out = list.release();
  });
}

pw_status pw_primitive_exponents(const pw_word* w, char* slope_class, int* separator_sign, int64_t* exponents,
                                 size_t cap, size_t* len) {
  PW_REQUIRE(w);
  PW_REQUIRE(len);
  ExponentSequence seq;
  const pw_status s = guarded([&] { seq = primitive_exponents(w->value); });
  if (s != PW_OK) return s;
  if (slope_class != nullptr) *slope_class = seq.slope_class == SlopeClass::BHeavy ? 'B' : 'A';
  if (separator_sign != nullptr) *separator_sign = seq.separator_sign;
  return fill<int64_t, std::int64_t>(seq.exponents, exponents, cap, len, identity_i64);
}

pw_status pw_is_primitive(const pw_word* w, pw_verdict* out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  return guarded([&] {
    const auto v = is_primitive(w->value);
    out->primitive = v.primitive ? 1 : 0;
    out->slope = to_c(v.slope);
    out->rotation = v.rotation;
    out->symmetry = static_cast<pw_symmetry>(v.symmetry);
    out->reason = static_cast<pw_reject_reason>(v.reason);
  });
}

const char* pw_symmetry_name(pw_symmetry s) { return symmetry_name(static_cast<Symmetry>(s)); }

const char* pw_reject_reason_name(pw_reject_reason r) { return reject_reason_name(static_cast<RejectReason>(r)); }

pw_status pw_palindromic_parts(pw_rational x, pw_word** first, pw_word** second) {
  PW_REQUIRE(first);
  PW_REQUIRE(second);
  return guarded([&] {
    auto parts = palindromic_parts(to_cpp(x));
    auto f = std::make_unique<pw_word>(pw_word{std::move(parts.first)});
    std::unique_ptr<pw_word> s;
    if (parts.kind == PartsKind::PalindromePair) s = std::make_unique<pw_word>(pw_word{std::move(parts.second)});
    *first = f.release();
    *second = s.release();
  });
}

pw_status pw_enumerate(int max_level, pw_enumerate_fn fn, void* ctx) {
  PW_REQUIRE(fn);
  struct Stop {};
  return guarded([&] {
    try {
      for_each_primitive(max_level, [&](const EnumeratedPrimitive& item) {
        const pw_word w{item.w};
        const pw_word e{item.e};
        const pw_enumerated c{to_c(item.slope), item.level, &w, &e};
        if (fn(ctx, &c) != 0) throw Stop{};
      });
    } catch (const Stop&) {
    }
  });
}

pw_status pw_associates(pw_rational x, pw_rational y, int* out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = associates(to_cpp(x), to_cpp(y)) ? 1 : 0; });
}

pw_status pw_cutting_word(pw_rational x, pw_start start, uint64_t offset, pw_word** out) {
  PW_REQUIRE(out);
  return guarded([&] {
    CuttingSpec spec;
    spec.slope = to_cpp(x);
    switch (start) {
      case PW_START_LOWEST_A: spec.start = StartKind::LowestASide; break;
      case PW_START_RIGHTMOST_BOTTOM: spec.start = StartKind::RightmostBottom; break;
      case PW_START_MIDDLE: spec.start = StartKind::MiddleStrand; break;
      case PW_START_OFFSET: spec.start = StartKind::Offset; break;
      default: throw DomainError("unknown start " + std::to_string(static_cast<int>(start)));
    }
    spec.offset = static_cast<std::size_t>(offset);
    *out = new_word(cutting_word(spec));
  });
}

pw_status pw_centered_palindrome(pw_rational x, pw_word** out) {
  PW_REQUIRE(out);
  return guarded([&] { *out = new_word(centered_palindrome(to_cpp(x))); });
}

pw_status pw_diagram_build(const pw_word* w, pw_diagram** out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  return guarded([&] { *out = new pw_diagram{strand_diagram(w->value)}; });
}

void pw_diagram_free(pw_diagram* d) { delete d; }

pw_status pw_diagram_counts(const pw_diagram* d, pw_counts* out) {
  PW_REQUIRE(d);
  PW_REQUIRE(out);
  *out = {d->value.counts.vertical, d->value.counts.horizontal, d->value.counts.corner};
  return PW_OK;
}

pw_status pw_diagram_is_simple(const pw_diagram* d, int* out) {
  PW_REQUIRE(d);
  PW_REQUIRE(out);
  *out = d->value.simple ? 1 : 0;
  return PW_OK;
}

pw_status pw_diagram_json(const pw_diagram* d, char** out) {
  PW_REQUIRE(d);
  PW_REQUIRE(out);
  return guarded([&] { *out = dup_string(diagram_json(d->value)); });
}

pw_status pw_diagram_svg(const pw_diagram* d, char** out) {
  PW_REQUIRE(d);
  PW_REQUIRE(out);
  return guarded([&] { *out = dup_string(emit_svg(d->value)); });
}

pw_status pw_whitehead_is_primitive(const pw_word* w, int* out) {
  PW_REQUIRE(w);
  PW_REQUIRE(out);
  return guarded([&] { *out = whitehead_is_primitive(w->value) ? 1 : 0; });
}

pw_status pw_is_generating_pair(const pw_word* u, const pw_word* v, int* out) {
  PW_REQUIRE(u);
  PW_REQUIRE(v);
  PW_REQUIRE(out);
  return guarded([&] { *out = is_generating_pair(u->value, v->value) ? 1 : 0; });
}

pw_status pw_cross_check(unsigned max_len, int64_t pair_bound, char** json, int* ok) {
  PW_REQUIRE(json);
  return guarded([&] {
    const auto report = cross_check(max_len, pair_bound);
    *json = dup_string(report_json(report));
    if (ok != nullptr) *ok = report.ok() ? 1 : 0;
  });
}

}  // extern "C"

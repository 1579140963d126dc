#pragma once

// Command dispatch for the `ctrep` tool. Kept in the library so tests can
// drive it without spawning processes.
//
// Exit codes: 0 success or verified, 1 counterexample / impossibility /
// not CT, 2 usage or parse error. Diagnostics go to the error stream only.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctrep/bounds.hpp"
#include "ctrep/charpoly.hpp"
#include "ctrep/error.hpp"
#include "ctrep/identities.hpp"
#include "ctrep/quaternion.hpp"
#include "ctrep/random.hpp"
#include "ctrep/representations.hpp"
#include "ctrep/skew.hpp"
#include "ctrep/text.hpp"

namespace ctrep {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace cli_detail {

inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;

struct Options {
  int m = 0;
  std::size_t n = 1;
  std::string rep = "ct";
  std::string ring = "grassmann";
  std::vector<std::string> elements;
  std::vector<std::string> matrices;
  int degree = 0;
  int trials = 10;
  std::uint64_t seed = 1;
  std::int64_t coeff_bound = 3;
  bool json = false;
  bool exhaustive = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Context {
  Options opt;
  std::ostringstream out;
  std::ostringstream err;
  CLI::Option* m_flag = nullptr;

  int require_m() const {
    if (opt.m < 1) throw UsageError("--m is required");
    return opt.m;
  }

  void emit(const nlohmann::json& j) { out << j.dump(2) << "\n"; }
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

inline std::string coeff_list(const std::vector<Rational>& c) {
  std::vector<std::string> parts;
  for (const auto& x : c) parts.push_back(x.to_string());
  return "[" + join(parts, ", ") + "]";
}

inline nlohmann::json coeff_json(const std::vector<Rational>& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : c) j.push_back(x.to_string());
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline MatrixFile load_matrix(const std::string& path) { return parse_matrix_file(read_file(path)); }

inline RingSpec ring_from_options(const Context& ctx) {
  if (ctx.opt.ring == "rational") return {RingSpec::Kind::rational, 0};
  if (ctx.opt.ring == "grassmann") return {RingSpec::Kind::grassmann, ctx.require_m()};
  if (ctx.opt.ring == "sqfree") return {RingSpec::Kind::sqfree, ctx.require_m()};
  throw UsageError("--ring must be grassmann, sqfree or rational");
}

// Matrix printing shared by every command.
template <RingElement R>
void emit_matrix(Context& ctx, const Matrix<R>& a, const std::string& ring) {
  if (ctx.opt.json) {
    ctx.emit(to_json(a, ring));
  } else {
    ctx.out << to_string(a);
  }
}

// ---------------------------------------------------------------------------
// embed

inline int cmd_embed(Context& ctx) {
  const auto& o = ctx.opt;
  if (o.rep == "quaternion") {
    if (o.elements.size() != 1) throw UsageError("embed --rep quaternion needs one --element a,b,c,d");
    emit_matrix(ctx, quaternion_embed(parse_quaternion(o.elements[0])), "rational");
    return kOk;
  }
  if (o.elements.empty() == o.matrices.empty() || o.elements.size() > 1 || o.matrices.size() > 1) {
    throw UsageError("embed needs exactly one of --element or --matrix");
  }

  int m = o.m;
  std::optional<Matrix<GrassmannElement>> source_matrix;
  if (!o.matrices.empty()) {
    MatrixFile file = load_matrix(o.matrices[0]);
    if (file.ring.kind != RingSpec::Kind::grassmann) throw UsageError("embed --matrix needs a grassmann matrix file");
    if (ctx.m_flag->count() && o.m != file.ring.m) throw UsageError("--m disagrees with the matrix file header");
    m = file.ring.m;
    source_matrix = std::get<Matrix<GrassmannElement>>(std::move(file.matrix));
  }
  if (o.rep == "e3demo") {
    if (ctx.m_flag->count() && m != 3) throw UsageError("the e3demo representation is defined on E^(3) only");
    m = 3;
  }
  if (m < 1) throw UsageError("--m is required");

  auto element = [&] { return parse_grassmann(o.elements[0], m); };
  const std::string sqfree_label = "sqfree " + std::to_string(m);
  if (o.rep == "ct" || o.rep == "e3demo") {
    std::shared_ptr<const CTRepresentation> rep;
    if (o.rep == "ct") {
      if (m > kMaxCTGenerators) throw UsageError("--m too large for the ct representation");
      rep = ct_representation(m);
    } else {
      rep = std::make_shared<const CTRepresentation>(e3_demo_representation());
    }
    if (source_matrix) {
      emit_matrix(ctx, extend_to_matrices(*rep, *source_matrix), sqfree_label);
    } else {
      emit_matrix(ctx, (*rep)(element()), sqfree_label);
    }
    return kOk;
  }
  if (o.rep == "regular") {
    if (m > kMaxRegularGenerators) throw UsageError("--m too large for the regular representation");
    if (source_matrix) {
      const auto rep = regular_rep(m);
      emit_matrix(ctx, extend_to_matrices(rep, *source_matrix), "rational");
    } else {
      emit_matrix(ctx, regular_representation(m, element()), "rational");
    }
    return kOk;
  }
  throw UsageError("--rep must be ct, regular, e3demo or quaternion");
}

// ---------------------------------------------------------------------------
// mul

template <RingElement R>
R product_of(const std::vector<R>& xs) {
  R p = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) p = p * xs[i];
  return p;
}

inline int cmd_mul(Context& ctx) {
  const auto& o = ctx.opt;
  if (!o.matrices.empty()) {
    if (!o.elements.empty()) throw UsageError("mul takes either --element or --matrix operands, not both");
    std::vector<MatrixFile> files;
    for (const auto& path : o.matrices) files.push_back(load_matrix(path));
    for (const auto& f : files) {
      if (!(f.ring == files[0].ring)) throw UsageError("mul: matrix files disagree on the ring");
    }
    const std::string label = files[0].ring.to_string();
    std::visit(
        [&](const auto& first) {
          using M = std::decay_t<decltype(first)>;
          M p = first;
          for (std::size_t i = 1; i < files.size(); ++i) p = p * std::get<M>(files[i].matrix);
          emit_matrix(ctx, p, label);
        },
        files[0].matrix);
    return kOk;
  }
  if (o.elements.empty()) throw UsageError("mul needs --element or --matrix operands");
  const RingSpec ring = ring_from_options(ctx);
  auto emit_element = [&](const auto& x) {
    if (o.json) {
      ctx.emit({{"ring", ring.to_string()}, {"terms", to_json_value(x)}});
    } else {
      ctx.out << to_string(x) << "\n";
    }
  };
  switch (ring.kind) {
    case RingSpec::Kind::grassmann: {
      std::vector<GrassmannElement> xs;
      for (const auto& e : o.elements) xs.push_back(parse_grassmann(e, ring.m));
      emit_element(product_of(xs));
      break;
    }
    case RingSpec::Kind::sqfree: {
      std::vector<SquareFreePoly> xs;
      for (const auto& e : o.elements) xs.push_back(parse_sqfree(e, ring.m));
      emit_element(product_of(xs));
      break;
    }
    case RingSpec::Kind::rational: {
      std::vector<Rational> xs;
      for (const auto& e : o.elements) xs.push_back(parse_rational(e));
      emit_element(product_of(xs));
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// charpoly

inline void emit_charpoly(Context& ctx, const std::string& ring, std::size_t n, const CharPoly& cp,
                          std::optional<bool> residual) {
  if (ctx.opt.json) {
    nlohmann::json j = {{"ring", ring}, {"n", n}, {"degree", cp.degree()}, {"coeffs", coeff_json(cp.coeffs)}};
    if (residual) j["residual_is_zero"] = *residual;
    ctx.emit(j);
    return;
  }
  ctx.out << "degree=" << cp.degree() << "\n";
  ctx.out << "coeffs=" << coeff_list(cp.coeffs) << "\n";
  if (residual) ctx.out << "residual=" << (*residual ? "0" : "nonzero") << "\n";
}

inline int cmd_charpoly(Context& ctx) {
  if (ctx.opt.matrices.size() != 1) throw UsageError("charpoly needs exactly one --matrix");
  MatrixFile file = load_matrix(ctx.opt.matrices[0]);
  const std::string label = file.ring.to_string();
  try {
    switch (file.ring.kind) {
      case RingSpec::Kind::rational: {
        const auto& a = std::get<Matrix<Rational>>(file.matrix);
        emit_charpoly(ctx, label, a.size(), newton_charpoly(a), std::nullopt);
        return kOk;
      }
      case RingSpec::Kind::sqfree: {
        const auto& a = std::get<Matrix<SquareFreePoly>>(file.matrix);
        emit_charpoly(ctx, label, a.size(), newton_charpoly(a), std::nullopt);
        return kOk;
      }
      case RingSpec::Kind::grassmann: {
        // Scalar Cayley-Hamilton identity through the CT representation.
        const auto& a = std::get<Matrix<GrassmannElement>>(file.matrix);
        const CHCertificate cert = cayley_hamilton(file.ring.m, a);
        emit_charpoly(ctx, label, a.size(), cert.coeffs, cert.residual_is_zero);
        return cert.residual_is_zero ? kOk : kRefuted;
      }
    }
  } catch (const NonConstantTrace& e) {
    ctx.err << e.what() << " at power " << e.power() << "\n";
    return kRefuted;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

inline int cmd_verify_ch(Context& ctx) {
  const auto& o = ctx.opt;
  std::vector<std::pair<int, Matrix<GrassmannElement>>> inputs;
  if (!o.matrices.empty()) {
    for (const auto& path : o.matrices) {
      MatrixFile file = load_matrix(path);
      if (file.ring.kind != RingSpec::Kind::grassmann) throw UsageError("verify ch needs grassmann matrix files");
      inputs.emplace_back(file.ring.m, std::get<Matrix<GrassmannElement>>(std::move(file.matrix)));
    }
  } else {
    const int m = ctx.require_m();
    if (o.n < 1) throw UsageError("--n must be positive");
    if (m > kMaxCHGenerators) throw UsageError("verify ch supports --m up to 6");
    Rng rng(o.seed);
    for (int t = 0; t < o.trials; ++t) {
      inputs.emplace_back(m, random_matrix(o.n, [&] { return random_grassmann(m, o.coeff_bound, rng); }));
    }
  }
  bool all_zero = true;
  nlohmann::json certs = nlohmann::json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const CHCertificate cert = cayley_hamilton(inputs[i].first, inputs[i].second);
    all_zero = all_zero && cert.residual_is_zero;
    if (o.json) {
      certs.push_back({{"m", cert.m},
                       {"n", cert.n},
                       {"degree", cert.degree},
                       {"coeffs", coeff_json(cert.coeffs.coeffs)},
                       {"residual_is_zero", cert.residual_is_zero}});
    } else {
      ctx.out << "certificate " << i + 1 << ": m=" << cert.m << " n=" << cert.n << " degree=" << cert.degree
              << " coeffs=" << coeff_list(cert.coeffs.coeffs) << " residual=" << (cert.residual_is_zero ? "0" : "nonzero")
              << "\n";
    }
  }
  if (o.json) {
    ctx.emit({{"seed", o.seed}, {"certificates", certs}, {"verified", all_zero}});
  } else {
    ctx.out << (all_zero ? "verified " : "FAILED ") << inputs.size() << " certificates\n";
  }
  return all_zero ? kOk : kRefuted;
}

template <RingElement R>
int report_standard(Context& ctx, const StandardVerdict<R>& v, const std::string& ring, std::size_t n) {
  if (ctx.opt.json) {
    nlohmann::json j = {{"k", v.k},
                        {"ring", ring},
                        {"n", n},
                        {"seed", v.seed},
                        {"tuples_checked", v.tuples_checked},
                        {"holds", v.holds}};
    if (v.witness) {
      nlohmann::json w = nlohmann::json::array();
      if constexpr (std::is_same_v<R, GrassmannElement> || std::is_same_v<R, SquareFreePoly>) {
        for (const auto& x : *v.witness) w.push_back(to_json_value(x));
        j["value"] = to_json_value(*v.value);
      } else {
        for (const auto& x : *v.witness) w.push_back(to_json(x, ring));
        j["value"] = to_json(*v.value, ring);
      }
      j["witness"] = w;
    }
    ctx.emit(j);
    return v.holds ? kOk : kRefuted;
  }
  if (v.holds) {
    ctx.out << "standard identity of degree " << v.k << " holds on " << v.tuples_checked << " tuples (ring=" << ring
            << " n=" << n << " seed=" << v.seed << ")\n";
    return kOk;
  }
  ctx.out << "counterexample to the standard identity of degree " << v.k << " at tuple " << v.tuples_checked
          << " (ring=" << ring << " n=" << n << " seed=" << v.seed << ")\n";
  for (std::size_t i = 0; i < v.witness->size(); ++i) {
    const auto& x = (*v.witness)[i];
    if constexpr (std::is_same_v<R, GrassmannElement> || std::is_same_v<R, SquareFreePoly>) {
      ctx.out << "x" << i + 1 << " = " << to_string(x) << "\n";
    } else {
      ctx.out << "x" << i + 1 << " =\n" << to_string(x);
    }
  }
  if constexpr (std::is_same_v<R, GrassmannElement> || std::is_same_v<R, SquareFreePoly>) {
    ctx.out << "value = " << to_string(*v.value) << "\n";
  } else {
    ctx.out << "value =\n" << to_string(*v.value);
  }
  return kRefuted;
}

inline int cmd_verify_standard(Context& ctx) {
  const auto& o = ctx.opt;
  if (o.degree < 1) throw UsageError("--degree is required");
  if (o.degree > kMaxStandardDegree) throw UsageError("degree too large");
  const RingSpec ring = ring_from_options(ctx);
  if (ring.kind == RingSpec::Kind::rational) throw UsageError("verify standard needs --ring grassmann or sqfree");
  const std::string label = ring.to_string();

  if (!o.elements.empty()) {
    // A fixed tuple of ring elements (n = 1).
    if (static_cast<int>(o.elements.size()) != o.degree) throw UsageError("--element count must equal --degree");
    auto run = [&](auto parse) {
      using R = decltype(parse(std::string()));
      std::vector<R> tuple;
      for (const auto& e : o.elements) tuple.push_back(parse(e));
      StandardVerdict<R> v;
      v.k = o.degree;
      v.seed = o.seed;
      v.tuples_checked = 1;
      auto r = standard_poly(tuple);
      if (!is_zero(r.value)) {
        v.holds = false;
        v.witness = tuple;
        v.value = r.value;
      }
      return report_standard(ctx, v, label, 1);
    };
    if (ring.kind == RingSpec::Kind::grassmann) return run([&](const std::string& s) { return parse_grassmann(s, ring.m); });
    return run([&](const std::string& s) { return parse_sqfree(s, ring.m); });
  }

  if (o.exhaustive) {
    if (ring.kind != RingSpec::Kind::grassmann || o.n != 1) throw UsageError("--exhaustive supports --ring grassmann with --n 1");
    if (ring.m * o.degree > kMaxExhaustiveBits) throw UsageError("exhaustive basis check too large");
    auto v = verify_standard_identity_on_basis(ring.m, o.degree);
    v.seed = o.seed;
    return report_standard(ctx, v, label, 1);
  }

  if (o.n < 1) throw UsageError("--n must be positive");
  if (o.n == 1) {
    if (ring.kind == RingSpec::Kind::grassmann) {
      return report_standard(ctx,
                             verify_standard_identity(o.degree, o.trials, o.seed,
                                                      [&](Rng& rng) { return random_grassmann(ring.m, o.coeff_bound, rng); }),
                             label, 1);
    }
    return report_standard(
        ctx,
        verify_standard_identity(o.degree, o.trials, o.seed, [&](Rng& rng) { return random_sqfree(ring.m, o.coeff_bound, rng); }),
        label, 1);
  }
  if (ring.kind == RingSpec::Kind::grassmann) {
    return report_standard(
        ctx, verify_standard_identity(o.degree, o.trials, o.seed, grassmann_matrix_sampler(ring.m, o.n, o.coeff_bound)),
        label, o.n);
  }
  return report_standard(
      ctx, verify_standard_identity(o.degree, o.trials, o.seed, sqfree_matrix_sampler(ring.m, o.n, o.coeff_bound)), label,
      o.n);
}

// Runs `body` with the Grassmann representation selected by --rep.
template <class Body>
int with_representation(Context& ctx, Body&& body) {
  const auto& o = ctx.opt;
  if (o.rep == "ct") {
    const int m = ctx.require_m();
    if (m > kMaxCTGenerators) throw UsageError("--m too large for the ct representation");
    return body(*ct_representation(m));
  }
  if (o.rep == "regular") {
    const int m = ctx.require_m();
    if (m > kMaxRegularGenerators) throw UsageError("--m too large for the regular representation");
    return body(regular_rep(m));
  }
  if (o.rep == "e3demo") {
    if (ctx.m_flag->count() && o.m != 3) throw UsageError("the e3demo representation is defined on E^(3) only");
    return body(e3_demo_representation());
  }
  throw UsageError("--rep must be ct, regular, e3demo or quaternion");
}

inline int cmd_verify_hom(Context& ctx) {
  const auto& o = ctx.opt;
  if (o.rep == "quaternion") {
    Rng rng(o.seed);
    auto draw = [&] {
      auto c = [&] { return Rational(rng.uniform(-o.coeff_bound, o.coeff_bound)); };
      Quaternion q;
      q.a = c();
      q.b = c();
      q.c = c();
      q.d = c();
      return q;
    };
    int checked = 0;
    bool holds = true;
    for (; checked < o.trials && holds; ++checked) {
      const Quaternion p = draw();
      const Quaternion q = draw();
      holds = quaternion_embed(p * q) == quaternion_embed(p) * quaternion_embed(q);
    }
    if (o.json) {
      ctx.emit({{"rep", "quaternion"}, {"seed", o.seed}, {"pairs_checked", checked}, {"holds", holds}});
    } else {
      ctx.out << "homomorphism " << (holds ? "holds" : "FAILS") << " on " << checked << " pairs (rep=quaternion seed="
              << o.seed << ")\n";
    }
    return holds ? kOk : kRefuted;
  }
  return with_representation(ctx, [&](const auto& rep) {
    const HomomorphismVerdict v = check_homomorphism(rep, o.trials, o.seed, o.coeff_bound);
    const std::size_t rank = rep.generators() <= 8 ? image_rank(rep) : 0;
    const std::size_t full = std::size_t{1} << rep.generators();
    if (o.json) {
      nlohmann::json j = {{"rep", rep.name()},       {"m", rep.generators()},   {"size", rep.size()},
                          {"seed", o.seed},          {"pairs_checked", v.pairs_checked},
                          {"holds", v.holds}};
      if (rank) {
        j["image_rank"] = rank;
        j["injective"] = rank == full;
      }
      if (v.witness) j["witness"] = {to_json_value(v.witness->first), to_json_value(v.witness->second)};
      ctx.emit(j);
    } else {
      ctx.out << "homomorphism " << (v.holds ? "holds" : "FAILS") << " on " << v.pairs_checked << " pairs (rep="
              << rep.name() << " m=" << rep.generators() << " seed=" << o.seed << ")\n";
      if (v.witness) ctx.out << "a = " << to_string(v.witness->first) << "\nb = " << to_string(v.witness->second) << "\n";
      if (rank) {
        ctx.out << "image rank " << rank << " of " << full << (rank == full ? " (injective)" : " (not injective)")
                << "\n";
      }
    }
    return v.holds ? kOk : kRefuted;
  });
}

inline int cmd_verify_ct(Context& ctx) {
  const auto& o = ctx.opt;
  if (o.rep == "quaternion") {
    // Traces of the basis images 1, i, j, k are 4, 0, 0, 0.
    if (o.json) {
      ctx.emit({{"rep", "quaternion"}, {"ct", true}});
    } else {
      ctx.out << "CT: trace of the image of a + bi + cj + dk is 4a (rep=quaternion)\n";
    }
    return kOk;
  }
  return with_representation(ctx, [&](const auto& rep) {
    const auto v = is_ct(rep, o.trials, o.seed, o.coeff_bound);
    if (o.json) {
      nlohmann::json j = {{"rep", rep.name()},
                          {"m", rep.generators()},
                          {"size", rep.size()},
                          {"seed", o.seed},
                          {"elements_checked", v.elements_checked},
                          {"ct", v.ct}};
      if (v.witness) {
        j["witness"] = to_json_value(*v.witness);
        j["witness_trace"] = to_json_value(*v.witness_trace);
      }
      ctx.emit(j);
    } else if (v.ct) {
      ctx.out << "CT on " << v.elements_checked << " elements (rep=" << rep.name() << " m=" << rep.generators()
              << " size=" << rep.size() << " seed=" << o.seed << ")\n";
    } else {
      ctx.out << "not CT: trace of the image of " << to_string(*v.witness) << " is " << to_string(*v.witness_trace)
              << " (rep=" << rep.name() << " m=" << rep.generators() << ")\n";
    }
    return v.ct ? kOk : kRefuted;
  });
}

// ---------------------------------------------------------------------------
// bounds, regular

inline int cmd_bounds(Context& ctx) {
  const EmbeddingBounds b = embedding_bounds(ctx.require_m());
  if (ctx.opt.json) {
    ctx.emit({{"m", b.m},
              {"min_t_commutative", b.min_t_commutative},
              {"min_t_over_K", b.min_t_over_K},
              {"ct_size", b.ct_size},
              {"regular_size", b.regular_size}});
  } else {
    ctx.out << "min_t_commutative=" << b.min_t_commutative << "\n";
    ctx.out << "min_t_over_K=" << b.min_t_over_K << "\n";
    ctx.out << "ct_size=" << b.ct_size << "\n";
    ctx.out << "regular_size=" << b.regular_size << "\n";
  }
  return kOk;
}

inline int cmd_regular(Context& ctx) {
  const auto& o = ctx.opt;
  const int m = ctx.require_m();
  if (m > kMaxRegularGenerators) throw UsageError("--m too large for the regular representation");
  const auto rep = regular_rep(m);
  const auto hom = check_homomorphism(rep, o.trials, o.seed, o.coeff_bound);
  // Trace of the regular image is 2^m times the constant term.
  bool trace_ok = true;
  Rng rng(o.seed);
  for (int i = 0; i < o.trials && trace_ok; ++i) {
    const GrassmannElement g = random_grassmann(m, o.coeff_bound, rng);
    trace_ok = trace(rep(g)) == Rational(std::int64_t{1} << m) * g.constant_term();
  }
  const std::int64_t ct_size = std::int64_t{1} << (m - 1);
  const std::int64_t regular_size = std::int64_t{1} << m;
  const bool ok = hom.holds && trace_ok && static_cast<std::int64_t>(rep.size()) == regular_size;
  if (o.json) {
    ctx.emit({{"m", m},
              {"ct_size", ct_size},
              {"regular_size", regular_size},
              {"homomorphism", hom.holds},
              {"trace_is_scaled_constant_term", trace_ok},
              {"pairs_checked", hom.pairs_checked}});
  } else {
    ctx.out << "ct_size=" << ct_size << "\n";
    ctx.out << "regular_size=" << regular_size << "\n";
    ctx.out << "the CT representation is half the size of the regular representation\n";
    ctx.out << "regular representation: homomorphism " << (hom.holds ? "holds" : "FAILS") << " on "
            << hom.pairs_checked << " pairs, trace = " << regular_size << " * constant term "
            << (trace_ok ? "holds" : "FAILS") << "\n";
  }
  return ok ? kOk : kRefuted;
}

// ---------------------------------------------------------------------------
// skew

inline SkewPoly<GrassmannElement> skew_operand(Context& ctx) {
  if (ctx.opt.elements.size() != 1) throw UsageError("needs one --element \"(g) + (h)*w\"");
  const int m = ctx.require_m();
  if (m > 6) throw UsageError("skew commands support --m up to 6");
  return parse_skew(ctx.opt.elements[0], m);
}

inline int cmd_skew_mu(Context& ctx) {
  const auto f = skew_operand(ctx);
  emit_matrix(ctx, mu_embed(f), "grassmann " + std::to_string(ctx.opt.m) + " [z]/(z^2)");
  return kOk;
}

inline int cmd_skew_iso(Context& ctx) {
  const auto f = skew_operand(ctx);
  const GrassmannElement x = grassmann_skew_iso(f);
  if (ctx.opt.json) {
    ctx.emit({{"ring", "grassmann " + std::to_string(x.generators())}, {"terms", to_json_value(x)}});
  } else {
    ctx.out << to_string(x) << "\n";
  }
  return kOk;
}

inline int cmd_skew_demo43(Context& ctx) {
  const auto& o = ctx.opt;
  constexpr int kOrder = 3;
  constexpr int kCap = 6;
  const auto sigma = cyclic_permutation_descriptor(kCap);
  using Poly = CappedPolynomial;
  using Skew = SkewPoly<Poly>;
  const Poly zero(3, kCap);
  auto var = [&](int i) { return Poly::variable(3, kCap, i); };
  const Skew f({var(0), var(1), zero}, sigma);
  const auto image = mu_embed_general(f);
  const TruncatedPoly<Poly> tr = trace(image);
  const Poly expected = f[0] + (*sigma)(f[0]) + sigma->power(f[0], 2);

  Rng rng(o.seed);
  int checked = 0;
  bool mult_ok = true;
  bool trace_ok = tr == TruncatedPoly<Poly>::constant(expected, kOrder) && (*sigma)(expected) == expected;
  for (; checked < o.trials && mult_ok && trace_ok; ++checked) {
    auto draw = [&] {
      std::vector<Poly> c;
      for (int i = 0; i < kOrder; ++i) c.push_back(random_capped_polynomial(3, 1, kCap, o.coeff_bound, rng));
      return Skew(std::move(c), sigma);
    };
    const Skew g = draw();
    const Skew h = draw();
    mult_ok = mu_embed_general(g * h) == mu_embed_general(g) * mu_embed_general(h);
    const TruncatedPoly<Poly> tg = trace(mu_embed_general(g));
    const Poly sum = g[0] + (*sigma)(g[0]) + sigma->power(g[0], 2);
    trace_ok = tg == TruncatedPoly<Poly>::constant(sum, kOrder) && (*sigma)(sum) == sum;
  }
  const bool ok = mult_ok && trace_ok;
  if (o.json) {
    nlohmann::json j = to_json(image, "Q[a,b,c] [z]/(z^3)");
    j["element"] = to_string(f);
    j["trace"] = to_json_value(tr);
    j["seed"] = o.seed;
    j["pairs_checked"] = checked;
    j["multiplicative"] = mult_ok;
    j["trace_fixed"] = trace_ok;
    ctx.emit(j);
  } else {
    ctx.out << "order-3 embedding of Q[a,b,c][w,sigma]/(w^3), sigma: a -> b -> c -> a\n";
    ctx.out << "image of " << to_string(f) << ":\n" << to_string(image);
    ctx.out << "trace = " << to_string(tr) << " (fixed by sigma)\n";
    ctx.out << "multiplicative on " << checked << " random pairs: " << (mult_ok ? "yes" : "NO")
            << ", trace is the sigma-orbit sum of the constant coefficient: " << (trace_ok ? "yes" : "NO") << "\n";
  }
  return ok ? kOk : kRefuted;
}

// ---------------------------------------------------------------------------
// remark35

inline int cmd_remark35(Context& ctx) {
  const ImpossibilityRecord rec = remark35_impossibility();
  const CHCertificate cert = cayley_hamilton(3, Matrix<GrassmannElement>(1, rec.element));
  auto mono = [](Mask mask) { return to_string(GrassmannElement::monomial(3, mask)); };
  if (ctx.opt.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rec.rows) {
      rows.push_back({{"monomial", mono(r.monomial)},
                      {"c1", r.c1_coeff.to_string()},
                      {"c2", r.c2_coeff.to_string()},
                      {"constant", r.constant.to_string()}});
    }
    nlohmann::json j = {{"element", to_string(rec.element)},
                        {"square", to_string(rec.square)},
                        {"rows", rows},
                        {"unsolvable", rec.unsolvable},
                        {"identity_degree", cert.degree},
                        {"identity_coeffs", coeff_json(cert.coeffs.coeffs)}};
    if (rec.witness) j["witness_monomial"] = mono(rec.witness->monomial);
    ctx.emit(j);
  } else {
    ctx.out << "A = " << to_string(rec.element) << "\n";
    ctx.out << "A^2 = " << to_string(rec.square) << "\n";
    ctx.out << "A^2 + c1*A + c2 = 0, coefficientwise:\n";
    for (const auto& r : rec.rows) {
      ctx.out << "  " << mono(r.monomial) << ": " << r.c1_coeff.to_string() << "*c1 + " << r.c2_coeff.to_string()
              << "*c2 + " << r.constant.to_string() << " = 0\n";
    }
    if (rec.unsolvable) {
      ctx.out << "unsolvable";
      if (rec.witness) {
        ctx.out << ": the " << mono(rec.witness->monomial) << " row reads " << rec.witness->constant.to_string()
                << " = 0";
      }
      ctx.out << "\n";
    } else {
      ctx.out << "solvable\n";
    }
    ctx.out << "scalar identity of degree " << cert.degree << " instead: coeffs=" << coeff_list(cert.coeffs.coeffs)
            << " residual=" << (cert.residual_is_zero ? "0" : "nonzero") << "\n";
  }
  return rec.unsolvable ? kRefuted : kOk;
}

// ---------------------------------------------------------------------------
// wiring

inline void add_m(CLI::App* app, Context& ctx) {
  ctx.m_flag = app->add_option("--m", ctx.opt.m, "number of Grassmann generators");
}
inline void add_random(CLI::App* app, Context& ctx) {
  app->add_option("--trials", ctx.opt.trials, "number of random samples")->check(CLI::NonNegativeNumber);
  app->add_option("--seed", ctx.opt.seed, "64-bit PRNG seed (mt19937_64)");
  app->add_option("--coeff-bound", ctx.opt.coeff_bound, "random coefficients lie in [-B, B]")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));
}
inline void add_rep(CLI::App* app, Context& ctx) {
  app->add_option("--rep", ctx.opt.rep, "ct | regular | e3demo | quaternion")
      ->check(CLI::IsMember({"ct", "regular", "e3demo", "quaternion"}));
}
inline void add_elements(CLI::App* app, Context& ctx, const std::string& help) {
  app->add_option("--element", ctx.opt.elements, help)->allow_extra_args(false);
}
inline void add_matrices(CLI::App* app, Context& ctx) {
  app->add_option("--matrix", ctx.opt.matrices, "matrix file")->allow_extra_args(false);
}
inline void add_json(CLI::App* app, Context& ctx) { app->add_flag("--json", ctx.opt.json, "machine-readable output"); }

}  // namespace cli_detail

/// Runs one command line (without the program name).
inline CommandResult run_command(const std::vector<std::string>& args) {
  using namespace cli_detail;
  Context ctx;
  CLI::App app{"Exact representations and identities for finitely generated Grassmann algebras", "ctrep"};
  app.require_subcommand(1);
  std::function<int(Context&)> action;
  auto leaf = [&](CLI::App* sub, int (*fn)(Context&)) {
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* embed = leaf(app.add_subcommand("embed", "image of an element or matrix under a representation"), cmd_embed);
  add_m(embed, ctx);
  add_rep(embed, ctx);
  add_elements(embed, ctx, "element of E^(m), or a,b,c,d for --rep quaternion");
  add_matrices(embed, ctx);
  add_json(embed, ctx);

  auto* mul = leaf(app.add_subcommand("mul", "product of elements or matrices, in order"), cmd_mul);
  add_m(mul, ctx);
  mul->add_option("--ring", ctx.opt.ring, "grassmann | sqfree | rational")
      ->check(CLI::IsMember({"grassmann", "sqfree", "rational"}));
  add_elements(mul, ctx, "factor (repeatable)");
  add_matrices(mul, ctx);
  add_json(mul, ctx);

  auto* charpoly = leaf(app.add_subcommand("charpoly", "characteristic polynomial by Newton's trace recursion"), cmd_charpoly);
  add_matrices(charpoly, ctx);
  add_json(charpoly, ctx);

  auto* verify = app.add_subcommand("verify", "check identities and representation properties");
  verify->require_subcommand(1);
  auto* ch = leaf(verify->add_subcommand("ch", "Cayley-Hamilton identities with rational coefficients"), cmd_verify_ch);
  add_m(ch, ctx);
  ch->add_option("--n", ctx.opt.n, "matrix size");
  add_random(ch, ctx);
  add_matrices(ch, ctx);
  add_json(ch, ctx);
  auto* standard = leaf(verify->add_subcommand("standard", "standard polynomial identity"), cmd_verify_standard);
  add_m(standard, ctx);
  standard->add_option("--n", ctx.opt.n, "matrix size");
  standard->add_option("--degree", ctx.opt.degree, "degree k of the standard polynomial");
  standard->add_option("--ring", ctx.opt.ring, "grassmann | sqfree")->check(CLI::IsMember({"grassmann", "sqfree"}));
  standard->add_flag("--exhaustive", ctx.opt.exhaustive, "check all tuples of basis monomials");
  add_elements(standard, ctx, "fixed argument (repeat --degree times)");
  add_random(standard, ctx);
  add_json(standard, ctx);
  auto* hom = leaf(verify->add_subcommand("hom", "homomorphism and injectivity of a representation"), cmd_verify_hom);
  add_m(hom, ctx);
  add_rep(hom, ctx);
  add_random(hom, ctx);
  add_json(hom, ctx);
  auto* ct = leaf(verify->add_subcommand("ct", "constant-trace property of a representation"), cmd_verify_ct);
  add_m(ct, ctx);
  add_rep(ct, ctx);
  add_random(ct, ctx);
  add_json(ct, ctx);

  auto* bounds = leaf(app.add_subcommand("bounds", "lower bounds on embedding sizes"), cmd_bounds);
  add_m(bounds, ctx);
  add_json(bounds, ctx);

  auto* regular = leaf(app.add_subcommand("regular", "regular representation checks and size comparison"), cmd_regular);
  add_m(regular, ctx);
  add_random(regular, ctx);
  add_json(regular, ctx);

  auto* skew = app.add_subcommand("skew", "skew polynomial embeddings");
  skew->require_subcommand(1);
  auto* mu = leaf(skew->add_subcommand("mu", "2x2 embedding of E^(m)[w,sigma]/(w^2)"), cmd_skew_mu);
  add_m(mu, ctx);
  add_elements(mu, ctx, "skew polynomial (g) + (h)*w");
  add_json(mu, ctx);
  auto* iso = leaf(skew->add_subcommand("iso", "isomorphism E^(m)[w,sigma]/(w^2) -> E^(m+1)"), cmd_skew_iso);
  add_m(iso, ctx);
  add_elements(iso, ctx, "skew polynomial (g) + (h)*w");
  add_json(iso, ctx);
  auto* demo43 = leaf(skew->add_subcommand("demo43", "order-3 embedding over Q[a,b,c] with cyclic sigma"), cmd_skew_demo43);
  add_random(demo43, ctx);
  add_json(demo43, ctx);

  auto* remark = leaf(app.add_subcommand("remark35", "no degree-2 scalar identity for v1 + v2*v3 in E^(3)"), cmd_remark35);
  add_json(remark, ctx);

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }
  try {
    result.exit_code = action(ctx);
  } catch (const UsageError& e) {
    ctx.err << "usage error: " << e.what() << "\n";
    result.exit_code = kUsage;
  } catch (const NonConstantTrace& e) {
    ctx.err << "error: " << e.what() << "\n";
    result.exit_code = kRefuted;
  } catch (const Error& e) {
    ctx.err << "error: " << e.what() << "\n";
    result.exit_code = kUsage;
  }
  if (result.exit_code == kUsage) ctx.out.str("");
  result.out = ctx.out.str();
  result.err = ctx.err.str();
  return result;
}

}  // namespace ctrep

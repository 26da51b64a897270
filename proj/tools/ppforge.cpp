// ppforge: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success or true verdict, 1 false verdict, 2 usage/parse/precondition error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ppforge/errors.hpp"
#include "ppforge/inverse.hpp"
#include "ppforge/json_io.hpp"
#include "ppforge/selfinv.hpp"

using namespace ppforge;
using ppforge::io::Json;
using u64 = std::uint64_t;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

// Thrown for malformed input; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline JSON when the argument starts with '{', stdin for "-" or empty,
// otherwise a file path.
Json read_json(const std::string& arg, const char* what) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (arg.empty() || arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (first != std::string::npos && arg[first] == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError(std::string("cannot open ") + what + " file " + arg);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

// A polynomial, or the inverse inside a certificate.
SparsePoly read_poly(const std::string& arg, const char* what) {
  const Json j = read_json(arg, what);
  if (j.is_object() && j.contains("inverse")) return io::poly_from_json(j.at("inverse"));
  return io::poly_from_json(j);
}

FieldPtr field_from_flags(u64 p, u64 n, const std::vector<u64>& modulus, const std::string& field_json) {
  if (!field_json.empty()) return io::field_from_json(read_json(field_json, "field"));
  if (p == 0 || n == 0) throw UsageError("give --p and --n, or --field");
  if (n > 64) throw std::invalid_argument("n must lie in [1, 64]");
  std::optional<std::vector<u64>> mod;
  if (!modulus.empty()) mod = modulus;
  return make_field(p, static_cast<unsigned>(n), mod);
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

// Smallest k with 2^k = v, if any.
std::optional<unsigned> log2_exact(u64 v) {
  for (unsigned k = 0; k < 64; ++k) {
    if ((u64{1} << k) == v) return k;
  }
  return std::nullopt;
}

InverseCertificate invert_by(const std::string& method, const CycloMapping& m, u64 cap) {
  if (method == "theorem33") return invert_theorem33(m);
  if (method == "cor41") return invert_cor41(m);
  if (method == "lagrange") return {lagrange_inverse(mapping_to_poly(m), cap), {}, std::nullopt, Verification::none};
  if (method == "cor43") {
    const auto sh = cor43_shape(m);
    if (!sh) throw PreconditionError("cor43: mapping is not of the form a = (a0, a1, ..., a1), r = (r0, r1, ..., r1), d >= 3");
    auto res = check_and_invert_cor43(m.params().field_ptr(), m.d(), sh->a0, sh->a1, sh->r0, sh->r1);
    if (!res.certificate) throw PreconditionError("cor43: " + res.decision.reason);
    return std::move(*res.certificate);
  }
  if (method == "cor44") {
    const Field& f = m.field();
    const char* shape = "cor44: mapping must be over F_(2^(2n)) with d = 3, a = (1, 1, 1), r = (2^i, 2^j, 2^j), i, j >= 1";
    if (f.p() != 2 || f.n() % 2 != 0 || m.d() != 3 || m.r()[2] != m.r()[1]) throw PreconditionError(shape);
    for (const auto& a : m.a()) {
      if (!a.is_one()) throw PreconditionError(shape);
    }
    const unsigned i = log2_exact(m.r()[0]).value_or(0);
    const unsigned j = log2_exact(m.r()[1]).value_or(0);
    if (i == 0 || j == 0) throw PreconditionError(shape);
    auto res = invert_cor44(f.n() / 2, i, j);
    if (!res.field->same_as(f)) throw PreconditionError("cor44: the field must use the default modulus and primitive element");
    return std::move(res.certificate);
  }
  if (method == "cor45") {
    const auto sh = cor45_shape(m);
    if (!sh) throw PreconditionError("cor45: all exponents r_i must be equal");
    return invert_cor45(m.params().field_ptr(), m.d(), sh->r, sh->h);
  }
  throw UsageError("unknown method " + method);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ppforge: cyclotomic-mapping permutation polynomials and their inverses"};
  app.require_subcommand(1);

  u64 cap = exhaustive_cap();
  u64 seed = VerifyOptions{}.seed;
  app.add_option("--cap", cap, "exhaustive-mode point cap (default from PPFORGE_EXHAUSTIVE_CAP or 65536)")
      ->check(CLI::Range(u64{1}, kMaxExhaustiveCap));
  app.add_option("--seed", seed, "seed for sampled verification");

  // field
  auto* field_cmd = app.add_subcommand("field", "construct a field and print its description");
  u64 fp = 0, fn = 0;
  std::vector<u64> fmod;
  std::string ffield;
  field_cmd->add_option("--p", fp, "characteristic");
  field_cmd->add_option("--n", fn, "extension degree");
  field_cmd->add_option("--modulus", fmod, "monic modulus, constant term first")->delimiter(',');
  field_cmd->add_option("--field", ffield, "field JSON to validate and normalize");

  // check
  auto* check_cmd = app.add_subcommand("check", "decide whether a cyclotomic mapping is a PP");
  std::string check_in;
  check_cmd->add_option("mapping", check_in, "mapping JSON, file, or - for stdin");

  // invert
  auto* invert_cmd = app.add_subcommand("invert", "inverse certificate of a cyclotomic mapping");
  std::string invert_in, method = "theorem33";
  u64 samples = VerifyOptions{}.samples;
  invert_cmd->add_option("mapping", invert_in, "mapping JSON, file, or - for stdin");
  invert_cmd->add_option("--method", method, "construction to use")
      ->check(CLI::IsMember({"theorem33", "cor41", "cor43", "cor44", "cor45", "lagrange"}));
  invert_cmd->add_option("--samples", samples, "sample count above the cap");

  // selfinv
  auto* selfinv_cmd = app.add_subcommand("selfinv", "catalog of self-inverse cyclotomic-mapping PPs as CSV");
  u64 sp = 0, sn = 0, max_r = SelfInverseOptions{}.max_r;
  std::vector<u64> smod, d_values, a_set;
  std::string sfield, out_path;
  selfinv_cmd->add_option("--p", sp, "characteristic");
  selfinv_cmd->add_option("--n", sn, "extension degree");
  selfinv_cmd->add_option("--modulus", smod, "monic modulus, constant term first")->delimiter(',');
  selfinv_cmd->add_option("--field", sfield, "field JSON instead of --p/--n");
  selfinv_cmd->add_option("--max-r", max_r, "largest exponent r_i")->check(CLI::PositiveNumber);
  selfinv_cmd->add_option("--d", d_values, "divisors of q - 1 to search (default all)")->delimiter(',');
  selfinv_cmd->add_option("--a-set", a_set, "allowed coefficient indices (default all nonzero)")->delimiter(',');
  selfinv_cmd->add_option("--out", out_path, "write the CSV here instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check that g inverts f");
  std::string vf, vg;
  verify_cmd->add_option("--f", vf, "polynomial JSON or file")->required();
  verify_cmd->add_option("--g", vg, "polynomial or certificate JSON or file")->required();
  verify_cmd->add_option("--samples", samples, "sample count above the cap");

  // table
  auto* table_cmd = app.add_subcommand("table", "canonical polynomial of a cyclotomic mapping");
  std::string table_in;
  table_cmd->add_option("mapping", table_in, "mapping JSON, file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  VerifyOptions vopts;
  vopts.cap = cap;
  vopts.samples = samples;
  vopts.seed = seed;

  try {
    if (*field_cmd) {
      print(io::field_to_json(*field_from_flags(fp, fn, fmod, ffield)));
      return kTrue;
    }
    if (*check_cmd) {
      const CycloMapping m = io::mapping_from_json(read_json(check_in, "mapping"));
      const PPDecision dec = is_pp_cyclotomic(m);
      Json j;
      j["pp"] = dec.is_pp;
      j["reason"] = dec.reason;
      print(j);
      return dec.is_pp ? kTrue : kFalse;
    }
    if (*invert_cmd) {
      const Json in = read_json(invert_in, "mapping");
      // The lagrange method also takes a bare polynomial.
      const bool bare = method == "lagrange" && in.is_object() && in.contains("terms");
      std::optional<CycloMapping> m;
      if (!bare) m = io::mapping_from_json(in);
      const SparsePoly f = bare ? io::poly_from_json(in) : mapping_to_poly(*m);
      InverseCertificate cert = bare ? InverseCertificate{lagrange_inverse(f, cap), {}, std::nullopt, Verification::none}
                                     : invert_by(method, *m, cap);
      certify(cert, f, vopts);
      print(io::certificate_to_json(cert));
      if (cert.verified == Verification::none) {
        std::cerr << "ppforge: the constructed inverse failed verification\n";
        return kFalse;
      }
      return kTrue;
    }
    if (*selfinv_cmd) {
      SelfInverseOptions opts;
      opts.max_r = max_r;
      opts.a_set = a_set;
      opts.d_values = d_values;
      opts.cap = cap;
      const std::string csv = io::catalog_csv(search_self_inverse(field_from_flags(sp, sn, smod, sfield), opts));
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << csv;
      }
      return kTrue;
    }
    if (*verify_cmd) {
      const SparsePoly f = read_poly(vf, "f");
      const SparsePoly g = read_poly(vg, "g");
      const VerifyResult res = verify_inverse(f, g, vopts);
      Json j;
      j["verified"] = to_string(res.verdict);
      j["counterexample"] = res.counterexample ? Json(res.counterexample->index()) : Json(nullptr);
      print(j);
      return res.ok() ? kTrue : kFalse;
    }
    if (*table_cmd) {
      print(io::poly_to_json(mapping_to_poly(io::mapping_from_json(read_json(table_in, "mapping")))));
      return kTrue;
    }
  } catch (const std::exception& e) {
    // Bad input, failed preconditions, and oversized fields all land here.
    std::cerr << "ppforge: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

// Command-line front end: Gröbner bases of code ideals, decoding,
// decoder comparison, coset transversals, and the golden result suite.

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "codegb/decode.hpp"
#include "codegb/ideal.hpp"
#include "codegb/textio.hpp"
#include "codegb/verify.hpp"

using namespace codegb;

namespace {

constexpr int EXIT_PARSE = 2;   // malformed input files or words
constexpr int EXIT_MATH = 3;    // domain errors (field/ideal/order)
constexpr int EXIT_GOLDEN = 4;  // verify-paper mismatch

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearCode load_code(const std::string& path) { return parse_code_spec(read_file(path)); }

std::string field_banner(const Field& F) {
  std::string out = "field p=" + std::to_string(F.p()) + " r=" + std::to_string(F.r());
  if (F.r() == 1) {
    out += " alpha=" + std::to_string(F.alpha_int());
  } else {
    out += " poly=";
    for (std::size_t i = 0; i < F.spec().primitive_poly.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(F.spec().primitive_poly[i]);
    }
    out += " alpha=a";
  }
  return out;
}

GroebnerBasis code_ideal_basis(const LinearCode& C, const std::string& order, bool closed_form) {
  if (order == "lex") {
    GroebnerBasis closed = code_ideal_lex_gb(C);
    if (closed_form) return closed;
    return reduce_basis(buchberger(code_ideal_generators(C).gens, closed.order));
  }
  MonomialOrder target = MonomialOrder::degrevlex(C.length());
  if (closed_form) return fglm(code_ideal_lex_gb(C), target);
  return reduce_basis(buchberger(code_ideal_generators(C).gens, target));
}

GroebnerBasis generalized_basis(const LinearCode& C, const std::string& order, bool closed_form) {
  GroebnerBasis lex = generalized_lex_gb(C);
  if (order == "lex") {
    if (closed_form) return lex;
    return reduce_basis(buchberger(generalized_ideal_generators(C).all(), lex.order));
  }
  MonomialOrder target = MonomialOrder::degrevlex(C.length() * (C.field().q() - 1));
  if (closed_form) return fglm(lex, target);
  return reduce_basis(buchberger(generalized_ideal_generators(C).all(), target));
}

struct TrialCounts {
  long long decoded = 0;
  long long failed = 0;
  long long wrong = 0;
  long long reductions = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "codegb: binomial ideals of linear codes, their Gröbner bases, and decoders.\n"
      "Exit codes: 0 ok, 2 input/parse error, 3 math-domain error, 4 reference mismatch."};
  app.require_subcommand(1);

  std::string spec_path, order = "lex", ideal = "code", format = "text";
  std::string emit_path, word_csv, basis_path, method = "complete", only;
  bool closed_form = false;
  bool timings = false;
  long long trials = 1000;
  int weight_cap = -1;
  unsigned long long seed = 1;

  CLI::App* gb = app.add_subcommand("gb", "Compute a Gröbner basis for a code's ideal");
  gb->add_option("spec", spec_path, "code-spec file")->required();
  gb->add_option("--ideal", ideal, "code | generalized | toric")->default_str("code");
  gb->add_option("--order", order, "lex | degrevlex")->default_str("lex");
  gb->add_flag("--closed-form", closed_form,
               "use the direct basis constructions (with order conversion for degrevlex)");
  gb->add_option("--emit", emit_path, "write the basis to this path");
  gb->add_option("--format", format, "text | tsv")->default_str("text");
  gb->add_flag("--timings", timings, "report construction time on stderr");

  CLI::App* dec = app.add_subcommand("decode", "Decode a received word");
  dec->add_option("spec", spec_path, "code-spec file")->required();
  dec->add_option("--word", word_csv, "received word, comma separated")->required();
  dec->add_option("--method", method, "complete | heuristic | oracle")->default_str("complete");
  dec->add_option("--basis", basis_path, "use a previously emitted basis file");
  dec->add_option("--format", format, "text | tsv")->default_str("text");

  CLI::App* cmp = app.add_subcommand("compare", "Monte-Carlo decoder comparison");
  cmp->add_option("spec", spec_path, "code-spec file")->required();
  cmp->add_option("--trials", trials, "number of trials")
      ->default_str("1000")
      ->check(CLI::PositiveNumber);
  cmp->add_option("--weight", weight_cap, "error weight cap (default t)");
  cmp->add_option("--seed", seed, "master seed")->default_str("1");
  cmp->add_option("--format", format, "text | tsv")->default_str("text");

  CLI::App* tra = app.add_subcommand("transversal", "Standard monomials and coset leaders");
  tra->add_option("spec", spec_path, "code-spec file")->required();
  tra->add_option("--order", order, "lex | degrevlex")->default_str("lex");
  tra->add_option("--format", format, "text | tsv")->default_str("text");

  CLI::App* ver = app.add_subcommand("verify-paper", "Run the built-in reference result suite");
  ver->add_option("--only", only, "run items whose name contains this substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : EXIT_PARSE;
  }

  try {
    if (gb->parsed()) {
      LinearCode C = load_code(spec_path);
      const Field& F = C.field();
      std::string banner = "# " + field_banner(F);
      GroebnerBasis B{MonomialOrder::lex(1), {}, false};
      VarNames names;
      auto t0 = std::chrono::steady_clock::now();
      if (ideal == "code") {
        B = code_ideal_basis(C, order, closed_form);
        names = VarNames::plain(C.length());
      } else if (ideal == "generalized") {
        B = generalized_basis(C, order, closed_form);
        names = VarNames::doubled(C.length(), F.q() - 1);
      } else if (ideal == "toric") {
        if (closed_form) throw parse_failure("--closed-form applies to code|generalized");
        std::size_t n = C.length(), m = n - C.dimension();
        std::vector<int> ranking(C.column_permutation());
        for (std::size_t i = 0; i < m; ++i) ranking.push_back(static_cast<int>(n + i));
        IntMatrix A = toric_mod_matrix(parity_lift(C), F.p());
        MonomialOrder target = order == "lex" ? MonomialOrder::lex(std::move(ranking))
                                              : MonomialOrder::degrevlex(std::move(ranking));
        B = toric_ideal_gb(A, target);
        names = VarNames::with_aux(n, m);
      } else {
        throw parse_failure("--ideal must be code, generalized or toric");
      }
      if (timings) {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "basis construction: %.6f s (%zu binomials)\n", secs,
                     B.elems.size());
      }
      std::string text = basis_to_string(B, names);
      if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        if (!out) throw parse_failure("cannot write '" + emit_path + "'");
        out << banner << "\n" << text;
        std::cout << "wrote " << B.elems.size() << " binomials to " << emit_path << "\n";
      } else if (format == "tsv") {
        for (const Binomial& b : B.elems)
          std::cout << monomial_to_string(b.lead(), names) << "\t"
                    << monomial_to_string(b.tail(), names) << "\n";
      } else {
        std::cout << banner << "\n" << text;
      }
      return 0;
    }

    if (dec->parsed()) {
      LinearCode C = load_code(spec_path);
      const Field& F = C.field();
      Word w = parse_word(word_csv, F);
      if (w.size() != C.length()) throw parse_failure("word length does not match the code");
      Distance dist = min_distance(C);

      if (method == "oracle") {
        Nearest near = nearest_codewords_bruteforce(C, w);
        if (format == "tsv") {
          std::cout << "oracle\t" << near.distance;
          for (const Word& c : near.closest) std::cout << "\t" << word_to_string(c, F);
          std::cout << "\n";
        } else {
          std::cout << "# " << field_banner(F) << "\n";
          std::cout << "method oracle\ndistance " << near.distance << "\n";
          for (const Word& c : near.closest)
            std::cout << "closest " << word_to_string(c, F) << "\n";
        }
        return 0;
      }

      GroebnerBasis B{MonomialOrder::lex(1), {}, false};
      if (!basis_path.empty()) {
        B = parse_basis(read_file(basis_path)).first;
      } else if (method == "heuristic") {
        B = code_ideal_basis(C, "degrevlex", true);
      } else {
        B = generalized_basis(C, "degrevlex", true);
      }
      DecodeOutcome out;
      if (method == "heuristic")
        out = heuristic_decode(C, w, B, dist.t);
      else if (method == "complete")
        out = complete_decode(C, w, B, dist.t);
      else
        throw parse_failure("--method must be complete, heuristic or oracle");

      const char* status = out.decoded() ? "decoded" : "fail";
      std::string cw = out.decoded() ? word_to_string(out.codeword, F) : "-";
      std::string ew = out.decoded() ? word_to_string(out.error, F) : "-";
      if (format == "tsv") {
        std::cout << method << "\t" << status << "\t" << cw << "\t" << ew << "\t"
                  << (out.unique ? 1 : 0) << "\t" << out.scalar_used << "\t"
                  << out.reductions_performed << "\n";
      } else {
        std::cout << "# " << field_banner(F) << "\n";
        std::cout << "# code [" << C.length() << "," << C.dimension() << "] d=" << dist.d
                  << " t=" << dist.t << "\n";
        std::cout << "method " << method << "\nstatus " << status << "\n";
        if (out.decoded()) {
          std::cout << "codeword " << cw << "\nerror " << ew << "\n";
          std::cout << "unique " << (out.unique ? 1 : 0) << "\n";
          if (out.scalar_used) std::cout << "scalar " << out.scalar_used << "\n";
        }
        std::cout << "reductions " << out.reductions_performed << "\n";
      }
      return 0;
    }

    if (cmp->parsed()) {
      LinearCode C = load_code(spec_path);
      const Field& F = C.field();
      Distance dist = min_distance(C);
      int wcap = weight_cap < 0 ? dist.t : weight_cap;
      const bool with_heuristic = F.r() == 1;
      GroebnerBasis heuristic_basis{MonomialOrder::lex(1), {}, false};
      if (with_heuristic) heuristic_basis = code_ideal_basis(C, "degrevlex", true);
      GroebnerBasis complete_basis = generalized_basis(C, "degrevlex", true);

      const std::size_t n = C.length(), k = C.dimension();
      enum { H = 0, CMPL = 1, ORC = 2 };
      TrialCounts counts[3];

      auto run_trial = [&](long long trial, TrialCounts local[3]) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + trial * 0xBF58476D1CE4E5B9ULL + 1);
        Word msg(k);
        for (std::size_t i = 0; i < k; ++i)
          msg[i] = FieldElem(static_cast<unsigned>(rng() % F.q()));
        Word sent = C.encode(msg);
        int w = static_cast<int>(rng() % (wcap + 1));
        std::vector<int> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[i] = static_cast<int>(i);
        for (int i = 0; i < w; ++i) std::swap(pos[i], pos[i + rng() % (n - i)]);
        Word received = sent;
        for (int i = 0; i < w; ++i)
          received[pos[i]] = F.add(received[pos[i]],
                                   FieldElem(static_cast<unsigned>(1 + rng() % (F.q() - 1))));

        if (with_heuristic) {
          DecodeOutcome h = heuristic_decode(C, received, heuristic_basis, dist.t);
          local[H].reductions += h.reductions_performed;
          if (!h.decoded()) ++local[H].failed;
          else if (h.codeword == sent) ++local[H].decoded;
          else { ++local[H].decoded; ++local[H].wrong; }
        }

        DecodeOutcome c = complete_decode(C, received, complete_basis, dist.t);
        local[CMPL].reductions += c.reductions_performed;
        if (c.codeword == sent) ++local[CMPL].decoded;
        else { ++local[CMPL].decoded; ++local[CMPL].wrong; }

        Nearest near = nearest_codewords_bruteforce(C, received);
        ++local[ORC].reductions;
        if (near.closest.size() == 1 && near.closest[0] == sent) ++local[ORC].decoded;
        else if (std::find(near.closest.begin(), near.closest.end(), sent) != near.closest.end())
          ++local[ORC].decoded;  // tie containing the sent word still counts as found
        else { ++local[ORC].decoded; ++local[ORC].wrong; }
      };

      unsigned nthreads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
      std::vector<std::thread> pool;
      std::vector<std::array<TrialCounts, 3>> partial(nthreads);
      for (unsigned th = 0; th < nthreads; ++th) {
        pool.emplace_back([&, th] {
          for (long long trial = th; trial < trials; trial += nthreads)
            run_trial(trial, partial[th].data());
        });
      }
      for (auto& t : pool) t.join();
      for (unsigned th = 0; th < nthreads; ++th)
        for (int m = 0; m < 3; ++m) {
          counts[m].decoded += partial[th][m].decoded;
          counts[m].failed += partial[th][m].failed;
          counts[m].wrong += partial[th][m].wrong;
          counts[m].reductions += partial[th][m].reductions;
        }

      const char* names[3] = {"heuristic", "complete", "oracle"};
      int first_method = with_heuristic ? 0 : 1;
      if (format == "tsv") {
        for (int m = first_method; m < 3; ++m)
          std::cout << names[m] << "\t" << counts[m].decoded - counts[m].wrong << "\t"
                    << counts[m].failed << "\t" << counts[m].wrong << "\t"
                    << static_cast<double>(counts[m].reductions) / trials << "\n";
      } else {
        std::cout << "# " << field_banner(F) << "\n";
        std::cout << "# trials=" << trials << " weight<=" << wcap << " seed=" << seed << "\n";
        std::cout << "method     success  fail  wrong  mean-reductions\n";
        for (int m = first_method; m < 3; ++m) {
          std::printf("%-10s %7lld %5lld %6lld  %.3f\n", names[m],
                      counts[m].decoded - counts[m].wrong, counts[m].failed, counts[m].wrong,
                      static_cast<double>(counts[m].reductions) / trials);
        }
      }
      return counts[H].wrong == 0 ? 0 : EXIT_MATH;
    }

    if (tra->parsed()) {
      LinearCode C = load_code(spec_path);
      const Field& F = C.field();
      GroebnerBasis B = code_ideal_basis(C, order, true);
      Transversal T = coset_transversal(C, B);
      VarNames names = VarNames::plain(C.length());
      if (format != "tsv") std::cout << "# " << field_banner(F) << "\n";
      for (const auto& [m, rep] : T.items)
        std::cout << monomial_to_string(m, names) << "\t" << word_to_string(rep, F) << "\n";
      return 0;
    }

    if (ver->parsed()) {
      bool all_pass = true;
      for (const verify::Result& r : verify::run(only)) {
        if (r.pass) {
          std::cout << "PASS " << r.name << "\n";
        } else {
          all_pass = false;
          std::cout << "FAIL " << r.name << "\n";
          if (!r.detail.empty()) std::cout << "  " << r.detail << "\n";
        }
      }
      return all_pass ? 0 : EXIT_GOLDEN;
    }
  } catch (const parse_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_PARSE;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_MATH;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_MATH;
  }
  return 0;
}

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "octant/census.hpp"
#include "octant/walks.hpp"

using namespace octant;

namespace {

StepSet parse_model(const std::string& text) {
  if (text.size() == 26) return StepSet::decode_diagram(text);
  if (text.size() == 7) return StepSet::from_hex(text);
  throw CLI::ValidationError("model must be a 26-character diagram or a 7-digit hex mask");
}

uint64_t seed_from_env() {
  const char* env = std::getenv("OCTANT_SEED");
  return env ? std::strtoull(env, nullptr, 10) : kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octant lattice-walk model classifier"};
  app.require_subcommand(1);

  std::string model_arg, out_path, seq_path, cone_text, file_arg;
  CensusConfig cfg;
  cfg.seed = seed_from_env();
  int horizon = 12, order = 6, degree = 6;
  bool csv = false, table = false;

  auto* decode = app.add_subcommand("decode", "decode a step diagram");
  decode->add_option("diagram", model_arg)->required();

  auto* classify = app.add_subcommand("classify", "classify one model");
  classify->add_option("model", model_arg)->required();
  classify->add_flag("--deep-match", cfg.deep_match);
  classify->add_flag("--certificates", cfg.certificates);

  auto* census = app.add_subcommand("census", "classify the full canonical universe");
  census->add_option("--shards", cfg.shards)->check(CLI::PositiveNumber);
  census->add_option("--shard", cfg.shard);
  census->add_option("--out", cfg.out)->required();
  census->add_option("--max-steps", cfg.max_steps);
  census->add_option("--cutoff", cfg.order_cutoff);
  census->add_flag("--deep-match", cfg.deep_match);
  census->add_flag("--certificates", cfg.certificates);
  census->add_flag("--resume", cfg.resume);

  auto* summ = app.add_subcommand("summarize", "aggregate a census file");
  summ->add_option("file", file_arg)->required();
  summ->add_flag("--csv", csv);

  auto* had = app.add_subcommand("hadamard", "Hadamard decomposition of one model");
  had->add_option("model", model_arg)->required();

  auto* enumerate = app.add_subcommand("enumerate", "count octant walks");
  enumerate->add_option("model", model_arg)->required();
  enumerate->add_option("--n", horizon)->required();
  enumerate->add_flag("--table", table);

  auto* guess = app.add_subcommand("guess", "guess a P-recurrence from a sequence file");
  guess->add_option("seqfile", seq_path)->required();
  guess->add_option("--order", order);
  guess->add_option("--degree", degree);

  auto* trop = app.add_subcommand("tropical-verify", "cone-invariance proof for one model");
  trop->add_option("model", model_arg)->required();
  trop->add_option("--cone", cone_text);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decode) {
      StepSet s = parse_model(model_arg);
      std::cout << "mask: " << s.to_hex() << "\n";
      std::cout << "diagram: " << s.encode_diagram() << "\n";
      std::cout << "steps (" << s.size() << "):";
      for (const Step& st : s.steps())
        std::cout << " (" << st.dx << "," << st.dy << "," << st.dz << ")";
      std::cout << "\n";
      std::cout << "has_group: " << (s.has_group() ? "true" : "false") << "\n";
      std::cout << "canonical: " << (s.is_canonical() ? "true" : "false") << "\n";
    } else if (*classify) {
      StepSet s = parse_model(model_arg);
      std::cout << classify_model(s, cfg).to_jsonl() << "\n";
    } else if (*census) {
      long n = run_census(cfg);
      std::cout << "records written: " << n << "\n";
    } else if (*summ) {
      CensusSummary s = summarize(file_arg);
      std::cout << (csv ? s.csv() : s.text());
    } else if (*had) {
      StepSet s = parse_model(model_arg);
      auto d = detect_hadamard(s);
      if (!d) {
        std::cout << "hadamard: none\n";
      } else {
        std::cout << "hadamard: (" << d->kind1 << "," << d->kind2 << ") axis "
                  << "xyz"[d->axis] << "\n";
        std::cout << "U = " << d->U.str() << "\nV = " << d->V.str() << "\nT = " << d->T.str()
                  << "\n";
        if (s.has_group()) {
          auto gs = hadamard_group_structure(s);
          std::cout << "group: Z2 x "
                    << (gs.dihedral_finite ? "D" + std::to_string(gs.dihedral_order) : "Dinf")
                    << "\n";
        }
      }
    } else if (*enumerate) {
      StepSet s = parse_model(model_arg);
      if (table) {
        WalkCountTable t = count_walks(s, horizon);
        for (const mpz_class& c : t.totals()) std::cout << c.get_str() << "\n";
      } else {
        for (const mpz_class& c : count_walk_totals(s, horizon)) std::cout << c.get_str() << "\n";
      }
    } else if (*guess) {
      std::ifstream in(seq_path);
      if (!in) throw std::runtime_error("cannot open " + seq_path);
      std::vector<mpq_class> seq;
      std::string tok;
      while (in >> tok) seq.emplace_back(mpq_class(tok));
      auto rec = guess_recurrence(seq, order, degree);
      if (!rec) {
        std::cout << "none (order <= " << order << ", degree <= " << degree << ", "
                  << seq.size() << " terms)\n";
      } else {
        std::cout << rec->str() << "\n" << rec->to_json() << "\n";
      }
    } else if (*trop) {
      StepSet s = parse_model(model_arg);
      if (!cone_text.empty()) {
        auto res = cone_verify(s, Cone::parse(cone_text));
        if (res.ok())
          std::cout << "proof: " << res.proof->to_json() << "\n";
        else
          std::cout << "failure: " << res.reason << "\n";
      } else {
        auto proof = cone_search(s);
        if (proof)
          std::cout << "proof: " << proof->to_json() << "\n";
        else
          std::cout << "no cone among the templates yields a proof\n";
      }
      auto cert = escape_certificate(s);
      std::cout << "escape certificate: " << (cert ? cert->to_json() : "none") << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsp/boundary.hpp"
#include "bsp/hereditary.hpp"
#include "bsp/json_io.hpp"
#include "bsp/ktheory.hpp"
#include "bsp/lattice.hpp"
#include "bsp/normal_form.hpp"
#include "bsp/odometer.hpp"
#include "bsp/verify.hpp"
#include "bsp/words.hpp"

namespace {

using bsp::Params;
using nlohmann::json;

struct Options {
  long long c = 1;
  long long d = 1;
  bool negative = false;
  std::string output = "text";
  std::uint64_t seed = 1;
  std::string grid;
  long long depth = 12;
};

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.output == "json")
    std::cout << payload.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::string tupleToCsv(const bsp::Tuple& t) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path category of a Baumslag-Solitar monoid: normal forms, "
               "joins, boundary dynamics, hereditary sets, K-theory"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--c", opt.c, "relation exponent c (a b^c = b^{+-d} a)");
  app.add_option("--d", opt.d, "relation exponent d");
  app.add_flag("--negative", opt.negative, "use the sign-flipping relation");
  app.add_option("--output", opt.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized verification");
  app.add_option("--grid", opt.grid,
                 "verification grid, e.g. \"3,2;2,2n\" (n = negative)");
  app.add_option("--depth", opt.depth, "search depth for sequence subcommands");

  std::string wordArg, wordArg2, seqArg, descArg;
  long long stepsArg = 0;
  std::vector<std::string> wordList;

  auto* cmdNormalize = app.add_subcommand("normalize", "left normal form of a word");
  cmdNormalize->add_option("word", wordArg, "monoid word, e.g. b^2ab")->required();
  auto* cmdFormR = app.add_subcommand("formr", "right normal form of a word");
  cmdFormR->add_option("word", wordArg, "monoid word")->required();
  auto* cmdMeets = app.add_subcommand("meets", "do two paths have a common extension?");
  cmdMeets->add_option("word1", wordArg, "first path")->required();
  cmdMeets->add_option("word2", wordArg2, "second path")->required();
  auto* cmdJoin = app.add_subcommand("join", "least common extension of two paths");
  cmdJoin->add_option("word1", wordArg, "first path")->required();
  cmdJoin->add_option("word2", wordArg2, "second path")->required();
  auto* cmdQlgen = app.add_subcommand(
      "qlgen", "generator of (alpha beta^{-1} L) intersect L");
  cmdQlgen->add_option("word1", wordArg, "alpha")->required();
  cmdQlgen->add_option("word2", wordArg2, "beta")->required();
  auto* cmdExhaustive =
      app.add_subcommand("exhaustive", "does a finite family meet every path?");
  cmdExhaustive->add_option("words", wordList, "family members")->required();
  auto* cmdPhi = app.add_subcommand("phi", "odometer digits and carries");
  cmdPhi->add_option("digits", seqArg, "comma-separated digits in [0,d)")->required();
  auto* cmdOrbit = app.add_subcommand("orbit", "iterate the +1 tail action");
  cmdOrbit->add_option("digits", seqArg, "comma-separated digits in [0,d)")->required();
  cmdOrbit->add_option("steps", stepsArg, "number of steps")->required();
  auto* cmdMember = app.add_subcommand("member", "hereditary-set membership");
  cmdMember->add_option("descriptor", descArg,
                        "finite:WORD | coset:CSV | c0:SEQ | cinf:SEQ | "
                        "cn1:CSV;CSV | cn2:SEQ;N")
      ->required();
  cmdMember->add_option("word", wordArg, "candidate path")->required();
  auto* cmdClassify =
      app.add_subcommand("classify-sigma", "admissible tails over a sequence");
  cmdClassify->add_option("sequence", seqArg, "pre|period (or period)")->required();
  auto* cmdChain = app.add_subcommand("chain", "saturation chain data (c < d)");
  cmdChain->add_option("sequence", seqArg, "pre|period (or period)")->required();
  auto* cmdWitness =
      app.add_subcommand("witness", "extension separating two distinct paths");
  cmdWitness->add_option("word1", wordArg, "first path")->required();
  cmdWitness->add_option("word2", wordArg2, "second path")->required();
  auto* cmdPresent = app.add_subcommand("present", "generators, relations, flags");
  auto* cmdKtheory = app.add_subcommand("ktheory", "K-groups of the boundary algebra");
  auto* cmdVerify = app.add_subcommand("verify", "run the cross-check suite");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    const Params par{opt.c, opt.d, opt.negative};
    const auto path = [&](const std::string& text) {
      return bsp::normalize(par, bsp::parseWord(text));
    };

    if (cmdNormalize->parsed()) {
      const bsp::PathL p = path(wordArg);
      emit(opt, bsp::pathToJson(p), bsp::pathToString(p));
    } else if (cmdFormR->parsed()) {
      const bsp::PathR r = bsp::toFormR(path(wordArg));
      emit(opt, bsp::formRToJson(r), bsp::formRToString(r));
    } else if (cmdMeets->parsed()) {
      const bool m = bsp::meets(path(wordArg), path(wordArg2));
      emit(opt, json{{"meets", m}}, m ? "true" : "false");
    } else if (cmdJoin->parsed()) {
      const auto j = bsp::join(path(wordArg), path(wordArg2));
      emit(opt, bsp::joinResultToJson(j),
           j ? bsp::pathToString(*j) : std::string("disjoint"));
    } else if (cmdQlgen->parsed()) {
      const bsp::PathL g = bsp::quasiLatticeGenerator(path(wordArg), path(wordArg2));
      emit(opt, bsp::pathToJson(g), bsp::pathToString(g));
    } else if (cmdExhaustive->parsed()) {
      std::vector<bsp::PathL> family;
      for (const auto& w : wordList) family.push_back(path(w));
      const bool ok = bsp::exhaustive(par, family);
      emit(opt, json{{"exhaustive", ok}}, ok ? "true" : "false");
    } else if (cmdPhi->parsed()) {
      const bsp::Tuple i = bsp::parseCsvLongs(seqArg);
      const bsp::CarryData cd = bsp::phi(par, i);
      json out{{"phi", cd.out}, {"signs", cd.signs}};
      out["r"] = json::array();
      for (const auto& r : cd.r) out["r"].push_back(bsp::toLong(r));
      std::string text = "phi = " + tupleToCsv(cd.out) + "\nr =";
      for (const auto& r : cd.r) text += " " + r.str();
      text += "\nsigns =";
      for (int s : cd.signs) text += (s > 0 ? " +1" : " -1");
      emit(opt, out, text);
    } else if (cmdOrbit->parsed()) {
      bsp::Tuple i = bsp::parseCsvLongs(seqArg);
      json lines = json::array();
      std::string text;
      for (long long t = 0; t <= stepsArg; ++t) {
        lines.push_back(i);
        text += (t ? "\n" : "") + tupleToCsv(i);
        i = bsp::bAction(par, i, 1);
      }
      emit(opt, json{{"orbit", lines}}, text);
    } else if (cmdMember->parsed()) {
      const bsp::Descriptor D = bsp::parseDescriptorArg(par, descArg);
      const bool m = bsp::member(D, path(wordArg));
      emit(opt, json{{"member", m}}, m ? "true" : "false");
    } else if (cmdClassify->parsed()) {
      const bsp::EPSeq seq = bsp::parseSeqArg(par, seqArg);
      const bsp::SigmaClassification sc = bsp::classifySigma(par, seq, opt.depth);
      json out;
      std::string text;
      switch (sc.groupCase) {
        case bsp::GroupCase::BS1:
          out = json{{"case", "BS1"}, {"greedy_n", sc.greedyN}};
          text = "case BS1: least admissible tails " + tupleToCsv(sc.greedyN);
          break;
        case bsp::GroupCase::BS2:
          out = json{{"case", "BS2"}, {"s", sc.s}, {"m", bsp::toLong(sc.m)}};
          text = "case BS2: limsup " + std::to_string(sc.s) + ", chain length " +
                 sc.m.str();
          break;
        case bsp::GroupCase::BS3:
          out = json{{"case", "BS3"}, {"sigma_empty", sc.sigmaEmpty}};
          text = "case BS3: no admissible tails";
          break;
      }
      emit(opt, out, text);
    } else if (cmdChain->parsed()) {
      const bsp::EPSeq seq = bsp::parseSeqArg(par, seqArg);
      const bsp::ChainInfo info = bsp::chainBS2(par, seq);
      emit(opt, json{{"s", info.s}, {"m", bsp::toLong(info.m)}},
           "limsup " + std::to_string(info.s) + ", chain length " + info.m.str() +
               " (" + bsp::Int(info.m + 1).str() + " distinct sets)");
    } else if (cmdWitness->parsed()) {
      const bsp::PathL g = bsp::separationWitness(path(wordArg), path(wordArg2));
      emit(opt, bsp::pathToJson(g), bsp::pathToString(g));
    } else if (cmdPresent->parsed()) {
      const bsp::StructuralFlags flags = bsp::structuralFlags(par);
      std::vector<std::string> relations;
      relations.push_back("S_a* S_a = 1");
      relations.push_back("S_b* S_b = 1 = S_b S_b*");
      if (par.positive())
        relations.push_back("S_a S_b^" + std::to_string(par.c) + " = S_b^" +
                            std::to_string(par.d) + " S_a");
      else
        relations.push_back("S_b^" + std::to_string(par.d) + " S_a S_b^" +
                            std::to_string(par.c) + " = S_a");
      relations.push_back("sum_{i=0}^{" + std::to_string(par.d - 1) +
                          "} S_b^i S_a S_a* S_b^{-i} = 1");
      json out{{"parameters", par.describe()},
               {"relations", relations},
               {"flags",
                {{"minimal", flags.minimal},
                 {"contractive", flags.contractive},
                 {"topologically_free", flags.topologicallyFree},
                 {"kirchberg", flags.kirchberg}}}};
      std::string text = par.describe() + "\n";
      for (const auto& r : relations) text += "  " + r + "\n";
      text += std::string("minimal=") + (flags.minimal ? "yes" : "no") +
              " contractive=" + (flags.contractive ? "yes" : "no") +
              " topologically_free=" + (flags.topologicallyFree ? "yes" : "no") +
              " kirchberg=" + (flags.kirchberg ? "yes" : "no");
      emit(opt, out, text);
    } else if (cmdKtheory->parsed()) {
      const bsp::KTheory kt = bsp::kGroups(par);
      emit(opt, bsp::ktheoryToJson(kt),
           "K0 = " + bsp::groupToString(kt.k0) + "\nK1 = " +
               bsp::groupToString(kt.k1) + "\n[1] = " + kt.identityClass);
    } else if (cmdVerify->parsed()) {
      bsp::VerifyOptions vo;
      vo.seed = opt.seed;
      vo.grid = opt.grid.empty() ? bsp::defaultGrid() : bsp::parseGrid(opt.grid);
      const auto results = bsp::runVerifySuite(vo);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
      }
      std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
      return all ? 0 : 1;
    }
    return 0;
  } catch (const bsp::Error& err) {
    std::cerr << "error (" << bsp::errorCodeName(err.code()) << "): " << err.what()
              << "\n";
    return err.code() == bsp::ErrorCode::Syntax ? 2 : 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}

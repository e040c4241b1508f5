#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "anagraph/anagraph.hpp"
#include "anagraph/dictionary.hpp"
#include "anagraph/pipeline.hpp"
#include "anagraph/report.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

anagraph::DocFormat doc_format(const std::string& s) {
  return s == "json" ? anagraph::DocFormat::kJson : anagraph::DocFormat::kText;
}

anagraph::TableFormat table_format(const std::string& s) {
  return s == "text" ? anagraph::TableFormat::kText : anagraph::TableFormat::kCsv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computes which generator pairs of the 26-letter free group are forced to "
               "commute by the anagram relations of a word list, with replayable swap "
               "certificates for every commutator found"};

  std::string dict_path;
  std::string sanitize = "strict";
  std::string presentation_path, witnesses_path, progress_path, verification_path;
  std::string result_path, certificates_path, store_path;
  std::string presentation_format = "text", witnesses_format = "csv";
  std::string progress_format = "csv", verification_format = "text";
  anagraph::RunConfig config;
  config.parallelism = 0;
  bool quiet = false;

  app.add_option("--dict", dict_path, "word list, one word per line")->required();
  app.add_option("--sanitize", sanitize, "strict: reject bad lines; lenient: skip them")
      ->check(CLI::IsMember({"strict", "lenient"}));
  app.add_option("--presentation", presentation_path, "write the presentation here");
  app.add_option("--presentation-format", presentation_format)
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--witnesses", witnesses_path, "write the witness table here");
  app.add_option("--witnesses-format", witnesses_format)->check(CLI::IsMember({"csv", "text"}));
  app.add_option("--progress", progress_path, "write the per-iteration progress table here");
  app.add_option("--progress-format", progress_format)->check(CLI::IsMember({"csv", "text"}));
  app.add_option("--verification", verification_path, "write the containment report here");
  app.add_option("--verification-format", verification_format)
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--result", result_path, "write the full result as JSON here");
  app.add_option("--certificates", certificates_path, "write the certificate audit JSON here");
  app.add_option("--dump-store", store_path, "write the final bucket store as JSON here");
  app.add_option("--max-iterations", config.max_iterations, "iteration cap")
      ->check(CLI::PositiveNumber);
  app.add_flag("--residual,!--no-residual", config.residual_phase,
               "process buckets left at the fixpoint (default on)");
  app.add_flag("--verify,!--no-verify", config.verify,
               "check every anagram class against the final set (default on)");
  app.add_option("--parallelism", config.parallelism, "worker threads; 0 = auto");
  app.add_flag("--quiet", quiet, "suppress the summary on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints the message; collapse its error codes onto exit 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::map<std::string, std::string> outputs = {
      {"--presentation", presentation_path}, {"--witnesses", witnesses_path},
      {"--progress", progress_path},         {"--verification", verification_path},
      {"--result", result_path},             {"--certificates", certificates_path},
      {"--dump-store", store_path},
  };
  std::set<std::string> distinct;
  for (const auto& [flag, path] : outputs) {
    if (path.empty()) continue;
    if (!distinct.insert(path).second) {
      std::cerr << "anagraph: output paths must be distinct (" << path << " repeated)\n";
      return 1;
    }
  }

  try {
    const auto policy = sanitize == "lenient" ? anagraph::SanitizePolicy::kLenient
                                              : anagraph::SanitizePolicy::kStrict;
    anagraph::Dictionary dict = anagraph::load_dictionary(dict_path, policy);
    if (dict.skipped_lines > 0 && !quiet) {
      std::cerr << "anagraph: skipped " << dict.skipped_lines << " unusable line(s)\n";
    }

    anagraph::RunResult result = anagraph::run(dict, config);

    if (!presentation_path.empty()) {
      write_file(presentation_path,
                 anagraph::emit_presentation(result, doc_format(presentation_format)));
    }
    if (!witnesses_path.empty()) {
      write_file(witnesses_path,
                 anagraph::emit_witness_table(result, table_format(witnesses_format)));
    }
    if (!progress_path.empty()) {
      write_file(progress_path, anagraph::emit_progress(result, table_format(progress_format)));
    }
    if (!verification_path.empty()) {
      write_file(verification_path,
                 anagraph::emit_verification(result, doc_format(verification_format)));
    }
    if (!result_path.empty()) {
      write_file(result_path, anagraph::run_result_to_json(result));
    }
    if (!certificates_path.empty()) {
      write_file(certificates_path, anagraph::emit_certificates(result));
    }
    if (!store_path.empty()) {
      write_file(store_path, anagraph::store_to_json(result.residual_buckets));
    }

    if (!quiet) {
      std::cout << dict.words.size() << " words (" << dict.source_name << ")\n";
      std::cout << anagraph::emit_progress(result, anagraph::TableFormat::kText);
      std::cout << "commutators: " << result.commutators.size() << " (missing "
                << result.missing.size() << "), residual buckets: "
                << result.residual_buckets.bucket_count() << "\n";
      if (result.verification_ran || result.residual_phase_ran) {
        std::cout << "all anagram relations implied: "
                  << (result.verification.all_relations_implied ? "yes" : "no") << "\n";
      }
    }

    if (!result.verification.all_relations_implied) {
      std::cerr << "anagraph: " << result.verification.failing_pairs.size()
                << " anagram relation(s) not implied by the final commutators\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "anagraph: " << e.what() << "\n";
    return 1;
  }
}

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "inertia/cache.hpp"
#include "inertia/characters.hpp"
#include "inertia/gcomplex.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"
#include "inertia/serialize.hpp"
#include "inertia/simplicial.hpp"
#include "inertia/tuples.hpp"
#include "inertia/zoo.hpp"

namespace {

using inertia::CacheStore;
using inertia::CapExceeded;
using inertia::FiniteGroup;
using inertia::Json;
using inertia::RunLimits;
using inertia::ValidationError;

constexpr const char* kVersionTag = "inertia-1";

struct GlobalOpts {
  std::string group_file, zoo_spec;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  int threads = 1;
  double time_limit = 0.0;
  std::uint64_t tuple_cap = 1000000;
  std::string write_baseline;
};

void add_common(CLI::App* sub, GlobalOpts& o) {
  sub->add_option("--group", o.group_file, "group JSON file");
  sub->add_option("--zoo", o.zoo_spec, "built-in group NAME[:PARAMS]");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--cache-dir", o.cache_dir, "result cache directory")
      ->envname("INERTIA_CACHE_DIR");
  sub->add_flag("--no-cache", o.no_cache, "bypass the result cache");
  sub->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  sub->add_option("--time-limit", o.time_limit, "seconds before aborting");
  sub->add_option("--tuple-cap", o.tuple_cap, "enumeration cap");
  sub->add_option("--write-baseline", o.write_baseline,
                  "also write the result JSON to this file");
}

RunLimits make_limits(const GlobalOpts& o) {
  RunLimits limits;
  limits.threads = o.threads;
  limits.tuple_cap = o.tuple_cap;
  if (o.time_limit > 0) limits.set_time_limit(o.time_limit);
  return limits;
}

FiniteGroup resolve_group(const GlobalOpts& o, const RunLimits& limits) {
  if (o.group_file.empty() == o.zoo_spec.empty())
    throw ValidationError("provide exactly one of --group or --zoo");
  if (!o.group_file.empty()) return inertia::load_group_file(o.group_file, limits);
  return inertia::make_zoo_group(o.zoo_spec, limits);
}

Json group_echo(const FiniteGroup& g) {
  Json j = Json::object();
  j["name"] = g.name;
  j["order"] = g.order;
  j["fingerprint"] = inertia::sha256_hex(g.canonical_serialization());
  return j;
}

Json complex_echo(const inertia::GComplex& x) {
  Json canon = Json::object();
  canon["vertices"] = x.vertex_count;
  canon["maximal"] = x.maximal;
  canon["group"] = inertia::sha256_hex(x.group.canonical_serialization());
  canon["vertex_action"] = x.vertex_action;
  Json j = Json::object();
  j["name"] = x.name;
  j["vertices"] = x.vertex_count;
  j["group"] = group_echo(x.group);
  j["fingerprint"] = inertia::sha256_hex(canon.dump());
  return j;
}

Json rep_echo(const inertia::ExactRep& rep) {
  Json canon = Json::object();
  canon["dimension"] = rep.dimension;
  canon["conductor"] = rep.conductor;
  Json mats = Json::array();
  for (const auto& m : rep.generator_matrices) {
    Json mat = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(inertia::cyclotomic_to_json(v));
      mat.push_back(std::move(r));
    }
    mats.push_back(std::move(mat));
  }
  canon["matrices"] = std::move(mats);
  Json j = Json::object();
  j["name"] = rep.name;
  j["dimension"] = rep.dimension;
  j["fingerprint"] = inertia::sha256_hex(canon.dump());
  return j;
}

// ---- table rendering (human format; JSON stays the canonical output) ----

void print_table(const Json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        std::cout << indent << key << ":\n";
        print_table(value, indent + "  ");
      } else {
        std::cout << indent << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& value = j[i];
      if (value.is_object()) {
        std::cout << indent << "- [" << i << "]\n";
        print_table(value, indent + "  ");
      } else {
        std::cout << indent << "- " << value.dump() << "\n";
      }
    }
  } else {
    std::cout << indent << j.dump() << "\n";
  }
}

void emit(const GlobalOpts& o, const std::string& operation, const Json& inputs,
          const Json& result) {
  Json envelope = Json::object();
  envelope["operation"] = operation;
  envelope["inputs"] = inputs;
  envelope["result"] = result;
  if (o.format == "json") {
    std::cout << envelope.dump(2) << "\n";
  } else {
    print_table(envelope, "");
  }
  if (!o.write_baseline.empty()) {
    std::ofstream out(o.write_baseline, std::ios::binary | std::ios::trunc);
    out << result.dump(2) << "\n";
    if (!out.good())
      throw ValidationError("cannot write baseline file " + o.write_baseline);
  }
}

Json cached_result(const GlobalOpts& o, const std::string& operation,
                   const Json& inputs, const std::function<Json()>& compute) {
  CacheStore store(o.cache_dir, !o.no_cache && !o.cache_dir.empty());
  Json keyj = Json::object();
  keyj["version"] = kVersionTag;
  keyj["operation"] = operation;
  keyj["inputs"] = inputs;
  std::string key = inertia::sha256_hex(keyj.dump());
  if (store.enabled()) {
    if (auto hit = store.get(key)) {
      try {
        Json r = Json::parse(*hit);
        std::cerr << "cache hit " << key << "\n";
        return r;
      } catch (const std::exception&) {
        std::cerr << "cache entry " << key << " unreadable; recomputing\n";
      }
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  Json r = compute();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "computed " << operation << " in " << ms << " ms\n";
  if (store.enabled()) store.put(key, r.dump());
  return r;
}

inertia::Ring parse_ring(const std::string& s) {
  if (s == "Z") return inertia::Ring::Z;
  if (s == "Q") return inertia::Ring::Q;
  throw ValidationError("ring must be Z or Q");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finite group actions on finite complexes"};
  app.require_subcommand(1);
  GlobalOpts o;
  std::function<void()> run;

  // ---- classes ----
  {
    auto* sub = app.add_subcommand("classes", "conjugacy classes");
    add_common(sub, o);
    sub->callback([&]() {
      run = [&]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        Json result = cached_result(o, "classes", inputs, [&]() {
          return inertia::classes_to_json(g, inertia::conjugacy_classes(g));
        });
        emit(o, "classes", inputs, result);
      };
    });
  }

  // ---- tuples ----
  {
    auto* sub = app.add_subcommand("tuples", "commuting tuple classes");
    add_common(sub, o);
    auto n = std::make_shared<int>(1);
    auto p = std::make_shared<int>(0);
    sub->add_option("--n", *n, "tuple length")->check(CLI::NonNegativeNumber);
    sub->add_option("--p", *p, "restrict entries to p-power order")
        ->check(CLI::PositiveNumber);
    sub->callback([&, n, p]() {
      run = [&, n, p]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["n"] = *n;
        inputs["prime"] = *p > 0 ? Json(*p) : Json(nullptr);
        Json result = cached_result(o, "tuples", inputs, [&]() {
          std::optional<int> prime;
          if (*p > 0) prime = *p;
          return inertia::tuple_level_to_json(
              inertia::tuple_classes(g, *n, prime, limits));
        });
        emit(o, "tuples", inputs, result);
      };
    });
  }

  // ---- hkr-rank ----
  {
    auto* sub = app.add_subcommand("hkr-rank", "p-local commuting class count");
    add_common(sub, o);
    auto n = std::make_shared<int>(1);
    auto p = std::make_shared<int>(2);
    sub->add_option("--n", *n, "tuple length")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--p", *p, "prime")->required()->check(CLI::PositiveNumber);
    sub->callback([&, n, p]() {
      run = [&, n, p]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["n"] = *n;
        inputs["prime"] = *p;
        Json result = cached_result(o, "hkr-rank", inputs, [&]() {
          Json r = Json::object();
          r["rank"] = inertia::hkr_rank(g, *n, *p, limits);
          return r;
        });
        emit(o, "hkr-rank", inputs, result);
      };
    });
  }

  // ---- gl-orbits ----
  {
    auto* sub = app.add_subcommand("gl-orbits",
                                   "matrix-group orbits on p-local classes");
    add_common(sub, o);
    auto n = std::make_shared<int>(1);
    auto p = std::make_shared<int>(2);
    sub->add_option("--n", *n, "tuple length")->required()->check(CLI::PositiveNumber);
    sub->add_option("--p", *p, "prime")->required()->check(CLI::PositiveNumber);
    sub->callback([&, n, p]() {
      run = [&, n, p]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["n"] = *n;
        inputs["prime"] = *p;
        Json result = cached_result(o, "gl-orbits", inputs, [&]() {
          auto local = inertia::tuple_classes(g, *n, *p, limits);
          auto orbits = inertia::gl_orbits(g, *n, *p, limits);
          return inertia::gl_orbits_to_json(local, orbits);
        });
        emit(o, "gl-orbits", inputs, result);
      };
    });
  }

  // ---- rational-classes ----
  {
    auto* sub = app.add_subcommand("rational-classes",
                                   "power-map orbits on conjugacy classes");
    add_common(sub, o);
    sub->callback([&]() {
      run = [&]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        Json result = cached_result(o, "rational-classes", inputs, [&]() {
          return inertia::rational_classes_to_json(g, inertia::rational_classes(g));
        });
        emit(o, "rational-classes", inputs, result);
      };
    });
  }

  // ---- fiber-check ----
  {
    auto* sub = app.add_subcommand("fiber-check",
                                   "local-to-global commuting tuple check");
    add_common(sub, o);
    auto n = std::make_shared<int>(2);
    sub->add_option("--n", *n, "tuple length")->check(CLI::NonNegativeNumber);
    sub->callback([&, n]() {
      run = [&, n]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["n"] = *n;
        Json result = cached_result(o, "fiber-check", inputs, [&]() {
          return inertia::fiber_to_json(inertia::fiber_product_check(g, *n, limits));
        });
        emit(o, "fiber-check", inputs, result);
      };
    });
  }

  // ---- nerve-homology ----
  {
    auto* sub = app.add_subcommand("nerve-homology",
                                   "homology of the tuple-class nerve");
    add_common(sub, o);
    auto nerve = std::make_shared<std::string>("inertia");
    auto p = std::make_shared<int>(0);
    auto maxdeg = std::make_shared<int>(3);
    auto ring = std::make_shared<std::string>("Z");
    sub->add_option("--nerve", *nerve, "inertia|full")
        ->check(CLI::IsMember({"inertia", "full"}));
    sub->add_option("--p", *p, "p-local restriction (inertia nerve only)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-degree", *maxdeg, "top homology degree")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--ring", *ring, "Z|Q")->check(CLI::IsMember({"Z", "Q"}));
    sub->callback([&, nerve, p, maxdeg, ring]() {
      run = [&, nerve, p, maxdeg, ring]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        if (*nerve == "full" && *p > 0)
          throw ValidationError("the p-local filter applies to the inertia nerve only");
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["nerve"] = *nerve;
        inputs["prime"] = *p > 0 ? Json(*p) : Json(nullptr);
        inputs["max_degree"] = *maxdeg;
        inputs["ring"] = *ring;
        Json result = cached_result(o, "nerve-homology", inputs, [&]() {
          std::optional<int> prime;
          if (*p > 0) prime = *p;
          inertia::SimplicialSetModel model =
              *nerve == "inertia"
                  ? inertia::inertia_nerve_model(g, prime, *maxdeg, limits)
                  : inertia::full_nerve_quotient_model(g, *maxdeg, limits);
          auto chains = inertia::normalized_chains(model);
          return inertia::homology_to_json(
              inertia::homology(chains, parse_ring(*ring), *maxdeg));
        });
        emit(o, "nerve-homology", inputs, result);
      };
    });
  }

  // ---- compare-nerves ----
  {
    auto* sub = app.add_subcommand(
        "compare-nerves", "map from the commuting nerve to the full nerve");
    add_common(sub, o);
    auto maxdeg = std::make_shared<int>(2);
    auto ring = std::make_shared<std::string>("Z");
    sub->add_option("--max-degree", *maxdeg)->check(CLI::NonNegativeNumber);
    sub->add_option("--ring", *ring, "Z|Q")->check(CLI::IsMember({"Z", "Q"}));
    sub->callback([&, maxdeg, ring]() {
      run = [&, maxdeg, ring]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["max_degree"] = *maxdeg;
        inputs["ring"] = *ring;
        Json result = cached_result(o, "compare-nerves", inputs, [&]() {
          return inertia::comparison_to_json(
              inertia::compare_nerves(g, *maxdeg, parse_ring(*ring), limits));
        });
        emit(o, "compare-nerves", inputs, result);
      };
    });
  }

  // ---- sectors ----
  {
    auto* sub = app.add_subcommand("sectors", "fixed-sector table of an action");
    add_common(sub, o);
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    sub->add_option("--complex", *file, "G-complex JSON file")->required();
    sub->add_option("--n", *n, "tuple length")->check(CLI::NonNegativeNumber);
    sub->callback([&, file, n]() {
      run = [&, file, n]() {
        RunLimits limits = make_limits(o);
        inertia::GComplex x = inertia::load_gcomplex_file(*file, limits);
        Json inputs = Json::object();
        inputs["complex"] = complex_echo(x);
        inputs["n"] = *n;
        Json result = cached_result(o, "sectors", inputs, [&]() {
          return inertia::sector_table_to_json(inertia::sector_table(x, *n, limits));
        });
        emit(o, "sectors", inputs, result);
      };
    });
  }

  // ---- total-homology ----
  {
    auto* sub = app.add_subcommand("total-homology",
                                   "diagonal model of all twisted sectors");
    add_common(sub, o);
    auto file = std::make_shared<std::string>();
    auto maxdeg = std::make_shared<int>(2);
    sub->add_option("--complex", *file, "G-complex JSON file")->required();
    sub->add_option("--max-degree", *maxdeg)->check(CLI::NonNegativeNumber);
    sub->callback([&, file, maxdeg]() {
      run = [&, file, maxdeg]() {
        RunLimits limits = make_limits(o);
        inertia::GComplex x = inertia::load_gcomplex_file(*file, limits);
        Json inputs = Json::object();
        inputs["complex"] = complex_echo(x);
        inputs["max_degree"] = *maxdeg;
        Json result = cached_result(o, "total-homology", inputs, [&]() {
          return inertia::homology_to_json(
              inertia::total_inertia_homology(x, *maxdeg, limits));
        });
        emit(o, "total-homology", inputs, result);
      };
    });
  }

  // ---- euler-check ----
  {
    auto* sub = app.add_subcommand("euler-check",
                                   "sector vs pair-average Euler characteristic");
    add_common(sub, o);
    auto file = std::make_shared<std::string>();
    sub->add_option("--complex", *file, "G-complex JSON file")->required();
    sub->callback([&, file]() {
      run = [&, file]() {
        RunLimits limits = make_limits(o);
        inertia::GComplex x = inertia::load_gcomplex_file(*file, limits);
        Json inputs = Json::object();
        inputs["complex"] = complex_echo(x);
        Json result = cached_result(o, "euler-check", inputs, [&]() {
          return inertia::euler_to_json(inertia::euler_consistency(x, limits));
        });
        emit(o, "euler-check", inputs, result);
      };
    });
  }

  // ---- char-table ----
  {
    auto* sub = app.add_subcommand("char-table", "exact character table");
    add_common(sub, o);
    sub->callback([&]() {
      run = [&]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        Json result = cached_result(o, "char-table", inputs, [&]() {
          inertia::CharacterTable t = inertia::character_table(g, limits);
          Json r = Json::object();
          r["table"] = inertia::character_table_to_json(t);
          r["galois_orbits"] =
              inertia::galois_orbits_to_json(inertia::galois_orbits_of_rows(t));
          return r;
        });
        emit(o, "char-table", inputs, result);
      };
    });
  }

  // ---- artin-check ----
  {
    auto* sub = app.add_subcommand("artin-check",
                                   "row orbits versus power-map class orbits");
    add_common(sub, o);
    sub->callback([&]() {
      run = [&]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        Json result = cached_result(o, "artin-check", inputs, [&]() {
          return inertia::artin_to_json(inertia::artin_check(g, limits));
        });
        emit(o, "artin-check", inputs, result);
      };
    });
  }

  // ---- ages ----
  {
    auto* sub = app.add_subcommand("ages", "degree-shifting numbers per class");
    add_common(sub, o);
    auto repfile = std::make_shared<std::string>();
    sub->add_option("--rep", *repfile,
                    "representation JSON file (default: built-in for the zoo group)");
    sub->callback([&, repfile]() {
      run = [&, repfile]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        inertia::ExactRep rep = repfile->empty()
                                    ? inertia::builtin_rep(o.zoo_spec, limits)
                                    : inertia::load_rep_file(*repfile, limits);
        inertia::RepTable rho = inertia::extend_rep(g, rep, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["rep"] = rep_echo(rep);
        Json result = cached_result(o, "ages", inputs, [&]() {
          return inertia::age_table_to_json(rho, inertia::age_table(g, rho));
        });
        emit(o, "ages", inputs, result);
      };
    });
  }

  // ---- tuple-ages ----
  {
    auto* sub = app.add_subcommand("tuple-ages",
                                   "flag decomposition ages of tuple classes");
    add_common(sub, o);
    auto repfile = std::make_shared<std::string>();
    auto n = std::make_shared<int>(2);
    auto all_orders = std::make_shared<bool>(false);
    sub->add_option("--rep", *repfile,
                    "representation JSON file (default: built-in for the zoo group)");
    sub->add_option("--n", *n, "tuple length")->check(CLI::NonNegativeNumber);
    sub->add_flag("--all-orders", *all_orders,
                  "scan every ordering of each tuple");
    sub->callback([&, repfile, n, all_orders]() {
      run = [&, repfile, n, all_orders]() {
        RunLimits limits = make_limits(o);
        FiniteGroup g = resolve_group(o, limits);
        inertia::ExactRep rep = repfile->empty()
                                    ? inertia::builtin_rep(o.zoo_spec, limits)
                                    : inertia::load_rep_file(*repfile, limits);
        inertia::RepTable rho = inertia::extend_rep(g, rep, limits);
        Json inputs = Json::object();
        inputs["group"] = group_echo(g);
        inputs["rep"] = rep_echo(rep);
        inputs["n"] = *n;
        inputs["all_orders"] = *all_orders;
        Json result = cached_result(o, "tuple-ages", inputs, [&]() {
          auto rows = inertia::tuple_age_table(g, rho, *n, limits);
          Json r = inertia::tuple_age_table_to_json(*n, rows);
          if (*all_orders) {
            bool overall = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
              inertia::OrderScan scan =
                  inertia::tuple_age_all_orders(g, rho, rows[i].rep);
              r["rows"][i]["order_scan"] = inertia::order_scan_to_json(scan);
              overall = overall && scan.order_invariant;
            }
            r["order_invariant"] = overall;
          }
          return r;
        });
        emit(o, "tuple-ages", inputs, result);
      };
    });
  }

  // ---- zoo ----
  {
    auto* sub = app.add_subcommand("zoo", "list built-in groups or emit one");
    add_common(sub, o);
    auto mode = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>();
    sub->add_option("mode", *mode, "list|emit")
        ->required()
        ->check(CLI::IsMember({"list", "emit"}));
    sub->add_option("name", *name, "group to emit");
    sub->callback([&, mode, name]() {
      run = [&, mode, name]() {
        RunLimits limits = make_limits(o);
        Json inputs = Json::object();
        inputs["mode"] = *mode;
        if (*mode == "list") {
          emit(o, "zoo", inputs, inertia::zoo_catalog_to_json());
          return;
        }
        if (name->empty()) throw ValidationError("zoo emit needs a group name");
        inputs["name"] = *name;
        FiniteGroup g = inertia::make_zoo_group(*name, limits);
        emit(o, "zoo", inputs, inertia::group_to_json(g));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run) run();
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    if (!e.partial.empty()) std::cerr << "partial progress: " << e.partial << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

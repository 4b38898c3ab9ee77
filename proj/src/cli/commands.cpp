#include "dofregion/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include "dofregion/cli/pattern_file.hpp"
#include "dofregion/cli/report.hpp"
#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

namespace dofregion::cli {

namespace {

constexpr int kUserCapLimit = 16;
constexpr Eigen::Index kPlotMaxUsers = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& options, std::ostream& out, const Json& doc,
          const std::function<void(std::ostream&)>& table) {
  if (options.format == Format::Structured) {
    out << doc.dump(2) << "\n";
  } else {
    table(out);
  }
}

std::optional<CsitPattern> optional_pattern(const Options& options) {
  if (options.pattern_path.empty()) return std::nullopt;
  CsitPattern pattern = load_pattern(options.pattern_path);
  if (pattern.users() > options.max_users) {
    throw UsageError("pattern has " + std::to_string(pattern.users()) + " users, above --max-users " +
                     std::to_string(options.max_users));
  }
  return pattern;
}

CsitPattern require_pattern(const Options& options) {
  if (options.pattern_path.empty()) throw UsageError("--pattern is required for '" + options.command + "'");
  return *optional_pattern(options);
}

VectorXr require_values(const Options& options, const std::string& what) {
  const std::vector<Rational> values = parse_rational_list(options.values);
  if (values.empty()) throw UsageError("'" + options.command + "' expects " + what);
  if (static_cast<int>(values.size()) > options.max_users) {
    throw UsageError(std::to_string(values.size()) + " users exceed --max-users " + std::to_string(options.max_users));
  }
  return make_vector(values);
}

void check_unit_entries(const VectorXr& values) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < 0 || values(i) > 1) {
      throw UsageError("entry " + std::to_string(i + 1) + " = " + to_string(values(i)) + " is outside [0, 1]");
    }
  }
}

Json labels_json(const std::vector<int>& zero_based) {
  Json out = Json::array();
  for (int i : zero_based) out.push_back(i + 1);
  return out;
}

Json metadata_json(const std::optional<CsitPattern>& pattern, Eigen::Index users, const std::vector<int>& order) {
  Json out;
  out["users"] = users;
  if (pattern) {
    out["subchannels"] = pattern->subchannels();
    out["pattern_digest"] = pattern_digest(*pattern);
  }
  out["user_order"] = labels_json(order);
  return out;
}

struct SelectedRegion {
  HPolytope facets{1};
  std::vector<int> order;
};

SelectedRegion select_region(const Options& options, const std::optional<CsitPattern>& pattern) {
  const std::string& kind = options.kind;
  SelectedRegion out;
  if (kind == "canonical") {
    VectorXr beta;
    if (!options.values.empty()) {
      beta = require_values(options, "a parameter vector");
    } else if (pattern) {
      beta = average_state(*pattern).values;
    } else {
      throw UsageError("kind 'canonical' needs parameter values or --pattern");
    }
    check_unit_entries(beta);
    out.facets = canonical_region(beta, options.max_users);
    out.order = descending_order(beta);
    return out;
  }

  if (!pattern) throw UsageError("--pattern is required for kind '" + kind + "'");
  if (!options.values.empty()) throw UsageError("kind '" + kind + "' takes no positional values");
  out.order = normalize_user_order(*pattern).order;
  if (kind == "outer") {
    out.facets = outer_bound_region(*pattern);
  } else if (kind == "separate") {
    out.facets = separate_coding_region(*pattern);
  } else if (kind.rfind("subchannel:", 0) == 0) {
    const std::string index = kind.substr(std::string("subchannel:").size());
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(index, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != index.size()) throw UsageError("subchannel index '" + index + "' is not an integer");
    if (m < 1 || m > pattern->subchannels()) {
      throw UsageError("subchannel " + std::to_string(m) + " is outside 1.." + std::to_string(pattern->subchannels()));
    }
    out.facets = subchannel_region(*pattern, m - 1);
  } else {
    throw UsageError("unknown region kind '" + kind + "'");
  }
  return out;
}

void export_plot(const Options& options, const HPolytope& facets, const VPolytope& vertices) {
  if (options.export_plot.empty()) return;
  if (facets.dimension() > kPlotMaxUsers) {
    throw UsageError("--export-plot supports at most " + std::to_string(kPlotMaxUsers) + " users");
  }
  std::ofstream file(options.export_plot, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + options.export_plot + "'");
  file << plot_json(facets, vertices).dump(2) << "\n";
}

int cmd_region(const Options& options, std::ostream& out, bool vertices_only) {
  const std::optional<CsitPattern> pattern = optional_pattern(options);
  const SelectedRegion region = select_region(options, pattern);
  const HPolytope& facets = region.facets;
  const VPolytope vertices = enumerate_vertices(facets);
  const Eigen::Index users = facets.dimension();

  // Validate output targets before anything is written.
  if (!options.export_plot.empty() && users > kPlotMaxUsers) {
    throw UsageError("--export-plot supports at most " + std::to_string(kPlotMaxUsers) + " users");
  }

  std::optional<UserSet> subset;
  Rational subset_max;
  std::optional<Rational> subset_bound;
  if (!options.subset.empty()) {
    if (vertices_only) throw UsageError("--subset applies to the region command");
    subset = parse_user_list(options.subset);
    if (subset->empty()) throw UsageError("--subset is empty");
    if (subset->front() < 0 || subset->back() >= users) {
      throw UsageError("--subset labels must lie in 1.." + std::to_string(users));
    }
    VectorXr indicator = VectorXr::Zero(users);
    for (int i : *subset) indicator(i) = 1;
    subset_max = maximize(facets, indicator);
    if (options.kind == "outer") subset_bound = subset_sum_dof_bound(*pattern, *subset);
  }

  export_plot(options, facets, vertices);

  Json doc;
  doc["command"] = options.command;
  doc["kind"] = options.kind;
  doc["metadata"] = metadata_json(pattern, users, region.order);
  if (vertices_only) {
    doc["vertices"] = region_json(facets, vertices)["vertices"];
  } else {
    const Json body = region_json(facets, vertices);
    doc["variables"] = body["variables"];
    doc["facets"] = body["facets"];
    doc["vertices"] = body["vertices"];
  }
  if (subset) {
    doc["subset"]["users"] = labels_json(*subset);
    doc["subset"]["max_sum"] = to_string(subset_max);
    if (subset_bound) doc["subset"]["bound"] = to_string(*subset_bound);
  }

  emit(options, out, doc, [&](std::ostream& os) {
    os << "region: " << options.kind << "\n";
    os << "users: " << users << "\n";
    if (pattern) {
      os << "subchannels: " << pattern->subchannels() << "\n";
      os << "pattern digest: " << pattern_digest(*pattern) << "\n";
    }
    os << "user order: " << format_labels(region.order) << "\n";
    if (!vertices_only) write_facets(os, facets);
    write_vertices(os, vertices);
    if (subset) {
      os << "subset " << format_user_set(*subset) << ": max sum " << to_string(subset_max);
      if (subset_bound) os << ", bound " << to_string(*subset_bound);
      os << "\n";
    }
  });
  return kSuccess;
}

int cmd_separability(const Options& options, std::ostream& out) {
  const CsitPattern pattern = require_pattern(options);
  const SeparabilityVerdict verdict = separability_verdict(pattern, options.max_users);

  Json doc;
  doc["command"] = options.command;
  doc["metadata"] = metadata_json(pattern, pattern.users(), normalize_user_order(pattern).order);
  doc["separable"] = verdict.separable;
  std::optional<HPolytope> region;
  if (verdict.separable) {
    region = outer_bound_region(pattern);
    doc["region"] = region_json(*region, enumerate_vertices(*region));
  } else {
    const OrderViolationWitness& w = *verdict.order_witness;
    doc["order_witness"] = {{"k", w.k + 1}, {"j", w.j + 1}, {"l", w.l + 1}, {"q", w.q + 1}};
    doc["dof_witness"] = rational_array(*verdict.dof_witness);
    doc["caps"] = {{"separate", to_string(verdict.caps->separate)}, {"joint", to_string(verdict.caps->joint)}};
  }

  emit(options, out, doc, [&](std::ostream& os) {
    os << "pattern digest: " << pattern_digest(pattern) << "\n";
    if (verdict.separable) {
      os << "verdict: separable\n";
      write_facets(os, *region);
      return;
    }
    const OrderViolationWitness& w = *verdict.order_witness;
    os << "verdict: inseparable\n";
    os << "order witness: k=" << w.k + 1 << " j=" << w.j + 1 << " l=" << w.l + 1 << " q=" << w.q + 1 << "\n";
    os << "dof witness: " << to_string(*verdict.dof_witness) << "\n";
    os << "separate cap: " << to_string(verdict.caps->separate) << "\n";
    os << "joint cap: " << to_string(verdict.caps->joint) << "\n";
  });
  return verdict.separable ? kSuccess : kNegativeVerdict;
}

int cmd_decompose(const Options& options, std::ostream& out, std::ostream& err) {
  const CsitPattern pattern = require_pattern(options);
  const VectorXr target = require_values(options, "a DoF tuple");
  if (target.size() != pattern.users()) {
    throw UsageError("tuple has " + std::to_string(target.size()) + " entries, pattern has " +
                     std::to_string(pattern.users()) + " users");
  }
  if (!is_totally_ordered(pattern)) throw NotTotallyOrdered();
  const HPolytope outer = outer_bound_region(pattern);
  if (const LinearInequality* violated = first_violated(outer, target)) {
    err << "error: tuple " << to_string(target) << " is outside the outer bound\n";
    err << "violated facet: " << format_inequality(*violated) << "\n";
    return kTupleOutsideOuterBound;
  }

  const std::vector<DofTuple> parts = separate_tuple(pattern, target);
  DofTuple sum = DofTuple::Zero(pattern.users());
  std::vector<bool> members;
  for (int m = 0; m < pattern.subchannels(); ++m) {
    sum += parts[static_cast<std::size_t>(m)];
    members.push_back(contains_point(subchannel_region(pattern, m), parts[static_cast<std::size_t>(m)]));
  }
  const DofTuple average = sum / Rational(pattern.subchannels());
  const bool exact = equal(average, target);

  Json doc;
  doc["command"] = options.command;
  doc["metadata"] = metadata_json(pattern, pattern.users(), normalize_user_order(pattern).order);
  doc["target"] = rational_array(target);
  doc["subchannels"] = Json::array();
  for (std::size_t m = 0; m < parts.size(); ++m) {
    doc["subchannels"].push_back({{"subchannel", m + 1}, {"tuple", rational_array(parts[m])}, {"in_region", members[m]}});
  }
  doc["average"] = rational_array(average);
  doc["average_matches"] = exact;

  emit(options, out, doc, [&](std::ostream& os) {
    os << "target: " << to_string(target) << "\n";
    for (std::size_t m = 0; m < parts.size(); ++m) {
      os << "subchannel " << m + 1 << ": " << to_string(parts[m]) << " in region: " << (members[m] ? "yes" : "no")
         << "\n";
    }
    os << "average: " << to_string(average) << " matches target: " << (exact ? "yes" : "no") << "\n";
  });
  const bool ok = exact && std::all_of(members.begin(), members.end(), [](bool b) { return b; });
  return ok ? kSuccess : kNegativeVerdict;
}

int cmd_pn_decompose(const Options& options, std::ostream& out) {
  const CsitPattern pattern = require_pattern(options);
  const PnDecomposition pn = pn_decompose(pattern);
  const bool ordered = is_totally_ordered(pattern);
  const CsitPattern replicated = pn.pattern();
  std::optional<bool> equality;
  if (ordered) equality = polytopes_equal(separate_coding_region(replicated), outer_bound_region(pattern));

  Json doc;
  doc["command"] = options.command;
  doc["metadata"] = metadata_json(pattern, pattern.users(), pn.order);
  doc["sorted_average"] = rational_array(pn.sorted_average);
  doc["weights"] = rational_array(pn.weights);
  doc["replication"] = pn.replication;
  doc["counts"] = pn.counts;
  doc["pn_pattern"] = Json::array();
  for (int k = 0; k < replicated.users(); ++k) doc["pn_pattern"].push_back(rational_array(replicated.user_row(k)));
  doc["totally_ordered"] = ordered;
  if (equality) doc["region_equality"] = *equality;

  emit(options, out, doc, [&](std::ostream& os) {
    os << "user order: " << format_labels(pn.order) << "\n";
    os << "sorted average: " << to_string(pn.sorted_average) << "\n";
    os << "weights w_0..w_K: " << to_string(pn.weights) << "\n";
    os << "M': " << pn.replication << "\n";
    for (std::size_t l = 0; l < pn.counts.size(); ++l) {
      if (pn.counts[l] == 0) continue;
      os << "  p_" << l << " x" << pn.counts[l] << ": " << to_string(pn.state(static_cast<int>(l))) << "\n";
    }
    os << "pn pattern (input user order):\n";
    for (int k = 0; k < replicated.users(); ++k) os << "  " << to_string(replicated.user_row(k)) << "\n";
    os << "totally ordered: " << (ordered ? "yes" : "no") << "\n";
    if (equality) os << "separate region of pn pattern equals outer bound: " << (*equality ? "yes" : "no") << "\n";
  });
  return equality.value_or(true) ? kSuccess : kNegativeVerdict;
}

int cmd_polymatroid(const Options& options, std::ostream& out) {
  const VectorXr beta = require_values(options, "a parameter vector");
  check_unit_entries(beta);
  const PolymatroidCheck check = is_polymatroid(beta, options.max_users);

  Json doc;
  doc["command"] = options.command;
  doc["beta"] = rational_array(beta);
  doc["polymatroid"] = check.polymatroid;
  if (check.violation) {
    const PolymatroidViolation& v = *check.violation;
    const bool decreasing = v.kind == PolymatroidViolation::Kind::Decreasing;
    doc["violation"] = {{"kind", decreasing ? "decreasing" : "not_submodular"},
                        {"S", labels_json(v.s)},
                        {"T", labels_json(v.t)},
                        {"lhs", to_string(v.lhs)},
                        {"rhs", to_string(v.rhs)}};
  }

  emit(options, out, doc, [&](std::ostream& os) {
    os << "beta: " << to_string(beta) << "\n";
    if (!check.violation) {
      os << "verdict: polymatroid\n";
      return;
    }
    const PolymatroidViolation& v = *check.violation;
    os << "verdict: not a polymatroid\n";
    if (v.kind == PolymatroidViolation::Kind::Decreasing) {
      os << "decreasing: S=" << format_user_set(v.s) << " T=" << format_user_set(v.t) << " f(S)=" << to_string(v.lhs)
         << " f(T)=" << to_string(v.rhs) << "\n";
    } else {
      os << "not submodular: S=" << format_user_set(v.s) << " T=" << format_user_set(v.t) << "\n";
      os << "  f(S u T) + f(S n T) - 2 = " << to_string(v.lhs) << "\n";
      os << "  f(S) + f(T) - 2 = " << to_string(v.rhs) << "\n";
    }
  });
  return check.polymatroid ? kSuccess : kNegativeVerdict;
}

int cmd_verify_lemma2(const Options& options, std::ostream& out) {
  const VectorXr alpha = require_values(options, "a sorted CSIT state");
  const HPolytope projected = rs_region_via_fm(alpha, options.max_users);
  const HPolytope canonical = canonical_region(alpha, options.max_users);
  const bool pass = polytopes_equal(projected, canonical);

  std::vector<LinearInequality> only_fm;
  std::vector<LinearInequality> only_canonical;
  if (!pass) {
    const auto& a = projected.inequalities();
    const auto& b = canonical.inequalities();
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_fm));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_canonical));
  }

  Json doc;
  doc["command"] = options.command;
  doc["alpha"] = rational_array(alpha);
  doc["verdict"] = pass ? "PASS" : "FAIL";
  doc["facets"] = region_json(projected, enumerate_vertices(projected))["facets"];
  if (!pass) {
    doc["only_projection"] = Json::array();
    for (const auto& row : only_fm) doc["only_projection"].push_back(inequality_json(row));
    doc["only_canonical"] = Json::array();
    for (const auto& row : only_canonical) doc["only_canonical"].push_back(inequality_json(row));
  }

  emit(options, out, doc, [&](std::ostream& os) {
    os << "alpha: " << to_string(alpha) << "\n";
    os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    write_facets(os, projected);
    for (const auto& row : only_fm) os << "  only in projection: " << format_inequality(row) << "\n";
    for (const auto& row : only_canonical) os << "  only in canonical region: " << format_inequality(row) << "\n";
  });
  return pass ? kSuccess : kNegativeVerdict;
}

int dispatch(const Options& options, std::ostream& out, std::ostream& err) {
  if (options.max_users < 1 || options.max_users > kUserCapLimit) {
    throw UsageError("--max-users must lie in 1.." + std::to_string(kUserCapLimit));
  }
  const std::string& c = options.command;
  if (c == "region") return cmd_region(options, out, false);
  if (c == "vertices") return cmd_region(options, out, true);
  if (!options.export_plot.empty()) throw UsageError("--export-plot applies to region and vertices");
  if (c == "separability") return cmd_separability(options, out);
  if (c == "decompose") return cmd_decompose(options, out, err);
  if (c == "pn-decompose") return cmd_pn_decompose(options, out);
  if (c == "polymatroid") return cmd_polymatroid(options, out);
  if (c == "verify-lemma2") return cmd_verify_lemma2(options, out);
  throw UsageError("unknown command '" + c + "'");
}

}  // namespace

int run_command(const Options& options, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(options, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UnsortedAlpha& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgument;
  } catch (const NotTotallyOrdered& e) {
    err << "error: " << e.what() << "\n";
    return kNotTotallyOrdered;
  } catch (const TupleOutsideOuterBound& e) {
    err << "error: " << e.what() << "\n";
    return kTupleOutsideOuterBound;
  } catch (const DofRegionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgument;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kNegativeVerdict;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact DoF regions of the MISO broadcast channel with parallel subchannels"};
  app.name("dofregion");
  app.require_subcommand(1, 1);

  Options options;
  std::string format = "table";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--pattern", options.pattern_path, "CSIT pattern file (YAML or JSON)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--max-users", options.max_users, "Largest user count handled")->capture_default_str();
  };
  const auto add_values = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("values", options.values, what);
  };

  CLI::App* region = app.add_subcommand("region", "Facets and vertices of a DoF region");
  add_common(region);
  region->add_option("--kind", options.kind, "outer | separate | subchannel:m | canonical")->capture_default_str();
  region->add_option("--subset", options.subset, "Users for a sum-DoF query, e.g. \"1,2\"");
  region->add_option("--export-plot", options.export_plot, "Write plot data (K <= 3) to FILE");
  add_values(region, "Parameter vector for --kind canonical");

  CLI::App* vertices = app.add_subcommand("vertices", "Vertices of a DoF region");
  add_common(vertices);
  vertices->add_option("--kind", options.kind, "outer | separate | subchannel:m | canonical")->capture_default_str();
  vertices->add_option("--export-plot", options.export_plot, "Write plot data (K <= 3) to FILE");
  add_values(vertices, "Parameter vector for --kind canonical");

  add_common(app.add_subcommand("separability", "Separability verdict with witnesses"));
  CLI::App* decompose = app.add_subcommand("decompose", "Split a DoF tuple across subchannels");
  add_common(decompose);
  add_values(decompose, "DoF tuple");
  add_common(app.add_subcommand("pn-decompose", "Decompose the average state into PN states"));
  CLI::App* polymatroid = app.add_subcommand("polymatroid", "Check the region set function for polymatroid structure");
  add_common(polymatroid);
  add_values(polymatroid, "Parameter vector");
  CLI::App* lemma = app.add_subcommand("verify-lemma2", "Compare the projected rate-splitting region with the canonical region");
  add_common(lemma);
  add_values(lemma, "Sorted CSIT state");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgument;
  }

  options.command = app.get_subcommands().front()->get_name();
  options.format = format == "structured" ? Format::Structured : Format::Table;
  return run_command(options, out, err);
}

}  // namespace dofregion::cli

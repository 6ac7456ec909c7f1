// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "dm/dm.hpp"
#include "json.hpp"

namespace dm::cli {
namespace {

using nlohmann::json;

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    std::string item = list.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

ElementSet subset_of(const DeltaMatroid& d, const std::string& list) {
  return d.ground().subset(split_labels(list));
}

json labels_json(const GroundSet& ground, ElementSet s) {
  json out = json::array();
  s.for_each([&](int i) { out.push_back(ground.label(i)); });
  return out;
}

json matroid_json(const DeltaMatroid& d) {
  json feasible = json::array();
  for (ElementSet f : d.feasible())
    feasible.push_back(labels_json(d.ground(), f));
  return json{{"elements", d.ground().labels()}, {"feasible", feasible}};
}

// "a->b c->a": minor labels onto target labels.
std::string format_map(const GroundSet& from, const IsoMap& iso,
                       const GroundSet& to) {
  std::string out;
  for (std::size_t i = 0; i < iso.image.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += from.label(static_cast<int>(i)) + "->" + to.label(iso.image[i]);
  }
  return out;
}

json map_json(const GroundSet& from, const IsoMap& iso, const GroundSet& to) {
  json out = json::object();
  for (std::size_t i = 0; i < iso.image.size(); ++i) {
    out[from.label(static_cast<int>(i))] = to.label(iso.image[i]);
  }
  return out;
}

struct Context {
  std::ostream& out;
  bool as_json = false;
};

void print_obstruction(Context& ctx, const DeltaMatroid& d,
                       const Obstruction& o, const GroundSet& target_ground,
                       json& doc) {
  const GroundSet minor_ground = d.ground().without(o.deleted | o.contracted);
  if (ctx.as_json) {
    doc["target"] = o.target;
    doc["delete"] = labels_json(d.ground(), o.deleted);
    doc["contract"] = labels_json(d.ground(), o.contracted);
    doc["map"] = map_json(minor_ground, o.iso, target_ground);
    return;
  }
  ctx.out << "target: " << o.target << '\n'
          << "delete: " << d.ground().format(o.deleted) << '\n'
          << "contract: " << d.ground().format(o.contracted) << '\n'
          << "map: " << format_map(minor_ground, o.iso, target_ground) << '\n';
}

void emit_matroid(Context& ctx, const DeltaMatroid& d) {
  if (ctx.as_json) {
    ctx.out << matroid_json(d).dump() << '\n';
  } else {
    ctx.out << serialize(d);
  }
}

void emit(Context& ctx, const json& doc) {
  if (ctx.as_json) ctx.out << doc.dump() << '\n';
}

int cmd_validate(Context& ctx, const std::string& file) {
  const DeltaMatroid d = load_file(file);
  if (ctx.as_json) {
    emit(ctx, {{"valid", true},
               {"elements", d.size()},
               {"feasible_sets", d.feasible().size()}});
  } else {
    ctx.out << "valid\n"
            << "elements: " << d.size() << '\n'
            << "feasible sets: " << d.feasible().size() << '\n';
  }
  return kOk;
}

int cmd_info(Context& ctx, const std::string& file) {
  const DeltaMatroid d = load_file(file);
  ElementSet loops, coloops;
  for (int e = 0; e < d.size(); ++e) {
    if (is_loop(d, e)) loops = loops.with(e);
    if (is_coloop(d, e)) coloops = coloops.with(e);
  }
  if (ctx.as_json) {
    emit(ctx, {{"elements", d.ground().labels()},
               {"feasible_sets", d.feasible().size()},
               {"width", width(d).value},
               {"even", is_even(d)},
               {"matroid", is_matroid(d)},
               {"loops", labels_json(d.ground(), loops)},
               {"coloops", labels_json(d.ground(), coloops)}});
    return kOk;
  }
  ctx.out << "elements: " << d.ground().join(d.ground().full(), " ") << '\n'
          << "feasible sets: " << d.feasible().size() << '\n'
          << "width: " << width(d).value << '\n'
          << "even: " << (is_even(d) ? "yes" : "no") << '\n'
          << "matroid: " << (is_matroid(d) ? "yes" : "no") << '\n'
          << "loops: " << d.ground().format(loops) << '\n'
          << "coloops: " << d.ground().format(coloops) << '\n';
  return kOk;
}

int cmd_rho(Context& ctx, const std::string& file, const std::string& set) {
  const DeltaMatroid d = load_file(file);
  const ElementSet a = subset_of(d, set);
  const int value = rho(d, a);
  if (ctx.as_json) {
    emit(ctx, {{"set", labels_json(d.ground(), a)}, {"rho", value}});
  } else {
    ctx.out << "rho: " << value << '\n';
  }
  return kOk;
}

int cmd_min_width_twist(Context& ctx, const std::string& file, bool check) {
  const DeltaMatroid d = load_file(file);
  TwistChoice best;
  try {
    best = min_width_twist(d, check);
  } catch (const InternalError& e) {
    if (ctx.as_json) {
      emit(ctx, {{"check", "failed"}, {"error", e.what()}});
    } else {
      ctx.out << "check: failed (" << e.what() << ")\n";
    }
    return kPropertyFailed;
  }
  if (ctx.as_json) {
    json doc{{"twist", labels_json(d.ground(), best.twist)},
             {"width", best.width.value}};
    if (check) doc["check"] = "ok";
    emit(ctx, doc);
    return kOk;
  }
  ctx.out << "twist: " << d.ground().format(best.twist) << '\n'
          << "width: " << best.width.value << '\n';
  if (check) ctx.out << "check: ok\n";
  return kOk;
}

int cmd_obstruct(Context& ctx, const std::string& file) {
  const DeltaMatroid d = load_file(file);
  const auto found = is_obstructed(d);
  json doc{{"obstructed", found.has_value()}};
  if (!found) {
    if (ctx.as_json) {
      emit(ctx, doc);
    } else {
      ctx.out << "obstructed: no\n";
    }
    return kOk;
  }
  if (!ctx.as_json) ctx.out << "obstructed: yes\n";
  print_obstruction(ctx, d, *found,
                    catalog()[found->catalog_index - 1].ground(), doc);
  emit(ctx, doc);
  return kPropertyFailed;
}

// Certificates for delta-matroids without the empty set feasible are
// computed on D*P for the smallest feasible P and mapped back: a twist set A
// of D*P is the twist set A△P of D, and a minor (D*P)\X/Y is a twist of the
// minor of D that deletes X-P and Y∩P and contracts Y-P and X∩P.
int cmd_certify(Context& ctx, const std::string& file) {
  const DeltaMatroid d = load_file(file);
  const ElementSet pre = d.feasible().front();
  const DeltaMatroid base = twist(d, pre);
  const Certificate c = certify(base);
  json doc;
  if (!pre.empty()) {
    doc["pre_twist"] = labels_json(d.ground(), pre);
    if (!ctx.as_json)
      ctx.out << "pre-twist: " << d.ground().format(pre) << '\n';
  }
  if (c.is_witness()) {
    const ElementSet a = c.witness().twist ^ pre;
    const int w = c.witness().width.value;
    if (width(twist(d, a)).value != w) {
      throw InternalError("lifted twist witness failed verification");
    }
    if (ctx.as_json) {
      doc["result"] = "witness";
      doc["twist"] = labels_json(d.ground(), a);
      doc["width"] = w;
      emit(ctx, doc);
    } else {
      ctx.out << "result: witness\n"
              << "twist: " << d.ground().format(a) << '\n'
              << "width: " << w << '\n';
    }
    return kOk;
  }

  const Obstruction& inner = c.obstruction();
  const ElementSet removed = inner.deleted | inner.contracted;
  Obstruction lifted = inner;
  lifted.deleted = (inner.deleted - pre) | (inner.contracted & pre);
  lifted.contracted = (inner.contracted - pre) | (inner.deleted & pre);
  const ElementSet remaining_twist = squeeze(pre - removed, removed);
  lifted.twist = inner.iso.apply(remaining_twist);
  const DeltaMatroid& member = catalog()[inner.catalog_index - 1];
  const DeltaMatroid target = twist(member, lifted.twist);
  lifted.target =
      ExcludedMinor{inner.catalog_index, lifted.twist, target}.name();
  if (!verify_obstruction(d, lifted, target)) {
    throw InternalError("lifted minor failed verification");
  }
  if (!ctx.as_json) ctx.out << "result: minor\n";
  doc["result"] = "minor";
  print_obstruction(ctx, d, lifted, member.ground(), doc);
  emit(ctx, doc);
  return kPropertyFailed;
}

int cmd_enumerate(Context& ctx, int n, bool count_only) {
  if (count_only) {
    const auto count = count_delta_matroids(n);
    if (ctx.as_json) {
      emit(ctx, {{"n", n}, {"count", count}});
    } else {
      ctx.out << "count: " << count << '\n';
    }
    return kOk;
  }
  json all = json::array();
  std::uint64_t count = 0;
  for_each_delta_matroid(n, [&](const DeltaMatroid& d) {
    ++count;
    if (ctx.as_json) {
      all.push_back(matroid_json(d)["feasible"]);
    } else {
      ctx.out << format_family(d) << '\n';
    }
  });
  if (ctx.as_json) {
    emit(ctx, {{"n", n}, {"count", count}, {"delta_matroids", all}});
  } else {
    ctx.out << "count: " << count << '\n';
  }
  return kOk;
}

int cmd_verify(Context& ctx, int n, const std::string& tag, int jobs) {
  std::vector<Theorem> which;
  if (tag == "all") {
    for (Theorem t : all_theorems()) {
      if (t != Theorem::kMinorTwistCommute || n <= 3) which.push_back(t);
    }
  } else {
    which.push_back(parse_theorem(tag));
  }
  const EnumerationReport report = verify_theorems(n, which, jobs);
  if (ctx.as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json entry{{"theorem", theorem_tag(c.theorem)},
                 {"checked", c.checked},
                 {"failed", c.failed}};
      if (c.first_counterexample)
        entry["counterexample"] = *c.first_counterexample;
      checks.push_back(entry);
    }
    emit(ctx, {{"n", report.n},
               {"families", report.total_families},
               {"delta_matroids", report.valid_count},
               {"checks", checks},
               {"passed", report.passed()}});
  } else {
    ctx.out << "n: " << report.n << '\n'
            << "families: " << report.total_families << '\n'
            << "delta-matroids: " << report.valid_count << '\n';
    for (const auto& c : report.checks) {
      ctx.out << theorem_tag(c.theorem) << ": checked " << c.checked
              << " failed " << c.failed;
      if (c.first_counterexample)
        ctx.out << " first " << *c.first_counterexample;
      ctx.out << '\n';
    }
    ctx.out << "result: " << (report.passed() ? "pass" : "fail") << '\n';
  }
  return report.passed() ? kOk : kPropertyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Delta-matroid toolkit: twists, minors, width and excluded minors",
      "dmtool"};
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--json", ctx.as_json, "Emit JSON instead of text");

  std::string file, set, deleted, contracted, tag;
  int n = 0;
  int jobs = 1;
  bool check = false, count_only = false;
  std::function<int()> action;

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "Delta-matroid file")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and check the axioms");
  file_arg(validate);
  validate->callback([&] { action = [&] { return cmd_validate(ctx, file); }; });

  auto* info = app.add_subcommand("info", "Width, parity, loops and coloops");
  file_arg(info);
  info->callback([&] { action = [&] { return cmd_info(ctx, file); }; });

  auto* twist_cmd = app.add_subcommand("twist", "Print D*A");
  file_arg(twist_cmd);
  twist_cmd->add_option("-A", set, "Comma-separated twist set")->required();
  twist_cmd->callback([&] {
    action = [&] {
      const DeltaMatroid d = load_file(file);
      emit_matroid(ctx, twist(d, subset_of(d, set)));
      return kOk;
    };
  });

  auto* minor_cmd = app.add_subcommand("minor", "Print D\\X/Y");
  file_arg(minor_cmd);
  minor_cmd->add_option("--delete", deleted, "Comma-separated deletion set");
  minor_cmd->add_option("--contract", contracted,
                        "Comma-separated contraction set");
  minor_cmd->callback([&] {
    action = [&] {
      const DeltaMatroid d = load_file(file);
      emit_matroid(ctx,
                   minor(d, subset_of(d, deleted), subset_of(d, contracted)));
      return kOk;
    };
  });

  auto* restrict_cmd = app.add_subcommand("restrict", "Print D|A");
  file_arg(restrict_cmd);
  restrict_cmd->add_option("-A", set, "Comma-separated subset")->required();
  restrict_cmd->callback([&] {
    action = [&] {
      const DeltaMatroid d = load_file(file);
      emit_matroid(ctx, restriction(d, subset_of(d, set)));
      return kOk;
    };
  });

  auto* rho_cmd = app.add_subcommand("rho", "Bouchet rank of a subset");
  file_arg(rho_cmd);
  rho_cmd->add_option("-A", set, "Comma-separated subset")->required();
  rho_cmd->callback([&] { action = [&] { return cmd_rho(ctx, file, set); }; });

  auto* mwt = app.add_subcommand("min-width-twist", "Twist of minimum width");
  file_arg(mwt);
  mwt->add_flag("--check", check, "Cross-check every twist directly");
  mwt->callback(
      [&] { action = [&] { return cmd_min_width_twist(ctx, file, check); }; });

  auto* certify_cmd = app.add_subcommand(
      "certify", "Twist of width <= 1 or a minor isomorphic to D1..D5");
  file_arg(certify_cmd);
  certify_cmd->callback(
      [&] { action = [&] { return cmd_certify(ctx, file); }; });

  auto* obstruct =
      app.add_subcommand("obstruct", "Search for an excluded minor");
  file_arg(obstruct);
  obstruct->callback([&] { action = [&] { return cmd_obstruct(ctx, file); }; });

  auto* enumerate =
      app.add_subcommand("enumerate", "List all delta-matroids on n elements");
  enumerate->add_option("-n", n, "Ground set size (1..4)")->required();
  enumerate->add_flag("--count-only", count_only, "Only print the count");
  enumerate->callback(
      [&] { action = [&] { return cmd_enumerate(ctx, n, count_only); }; });

  auto* verify = app.add_subcommand("verify", "Exhaustively check a theorem");
  verify->add_option("-n", n, "Ground set size (1..4)")->required();
  verify->add_option("--theorem", tag, "t2|tt2|tt|tm1|t1|p1|l1|l2|all")
      ->required();
  verify->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1, 64));
  verify->callback(
      [&] { action = [&] { return cmd_verify(ctx, n, tag, jobs); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kPropertyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace dm::cli

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "checks.hpp"
#include "mseg/characters.hpp"
#include "mseg/graph.hpp"
#include "mseg/json_io.hpp"
#include "mseg/mp_crystal.hpp"
#include "mseg/seg_crystal.hpp"
#include "mseg/transport.hpp"

namespace mseg::tools {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  Content i = 0;
  int reps = 1;
  std::string mode = "right";
  std::string lambda;
  std::optional<int> bound;
  std::string word;
  int max_n = 0;
  std::string contents;
  std::string format = "json";
  std::string out_path;
  std::string level = "quick";
};

class Command {
public:
  Command(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Options opt;

  nlohmann::json input() const {
    std::stringstream buffer;
    if (opt.file.empty()) {
      buffer << in_.rdbuf();
    } else {
      std::ifstream f(opt.file);
      if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + opt.file);
      buffer << f.rdbuf();
    }
    return parse_json(buffer.str());
  }

  Multisegment seg_input() const { return multisegment_from_json(input()); }
  Multipartition mp_input() const { return multipartition_from_json(input()); }
  Weight lambda() const { return weight_from_json(parse_json(opt.lambda)); }

  void emit(const Json& j) const { out_ << j.dump() << '\n'; }

  void emit_text(const std::string& text) const {
    if (opt.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + opt.out_path);
    f << text;
  }

private:
  std::istream& in_;
  std::ostream& out_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundExceeded: return kBoundExceeded;
    case ErrorKind::TransportFailure: return kVerificationFailure;
    default: return kDomainError;
  }
}

void report(std::ostream& err, std::string_view kind, const std::string& message) {
  Json j{{"error", kind}, {"message", message}};
  err << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

std::vector<Content> parse_contents(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--contents expects lo..hi");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("--contents expects lo..hi");
    const std::string rest = text.substr(dots + 2);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size() || lo > hi) throw UsageError("--contents expects lo..hi with lo <= hi");
    std::vector<Content> out;
    for (Content c = lo; c <= hi; ++c) out.push_back(c);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("--contents expects lo..hi");
  }
}

using Action = std::function<int(Command&)>;

class Registry {
public:
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
                 Action action) {
    auto* sub = parent->add_subcommand(name, help);
    actions_[sub] = std::move(action);
    return sub;
  }

  void bind(CLI::App* sub, Action action) { actions_[sub] = std::move(action); }

  /// Action of the deepest parsed subcommand that has one.
  const Action* chosen(CLI::App& app) const {
    const Action* found = nullptr;
    CLI::App* cur = &app;
    while (cur != nullptr) {
      if (auto it = actions_.find(cur); it != actions_.end()) found = &it->second;
      CLI::App* next = nullptr;
      for (auto* sub : cur->get_subcommands()) {
        if (sub->parsed()) next = sub;
      }
      cur = next;
    }
    return found;
  }

private:
  std::map<CLI::App*, Action> actions_;
};

int emit_seg_result(Command& c, const std::optional<Multisegment>& d) {
  c.emit(to_json(d));
  return kOk;
}

void define_seg(CLI::App& app, Registry& reg, Options& o) {
  auto* seg = app.add_subcommand("seg", "Operators on multisegments")->require_subcommand(1);
  auto with_file = [&o](CLI::App* sub) {
    sub->add_option("--file", o.file, "Input JSON (default: stdin)");
    return sub;
  };
  auto with_i = [&o, with_file](CLI::App* sub) {
    sub->add_option("--i", o.i, "Label")->required();
    return with_file(sub);
  };
  auto with_reps = [&o, with_i](CLI::App* sub) {
    sub->add_option("--reps", o.reps, "Number of applications")
        ->check(CLI::NonNegativeNumber);
    return with_i(sub);
  };

  with_i(reg.leaf(seg, "eps", "Uncanceled minus count for E_i", [](Command& c) {
    c.emit(Json{{"eps", eps(c.seg_input(), c.opt.i)}});
    return kOk;
  }));
  with_i(reg.leaf(seg, "phi", "Uncanceled plus count for F_i", [](Command& c) {
    c.emit(Json{{"phi", phi(c.seg_input(), c.opt.i)}});
    return kOk;
  }));
  with_reps(reg.leaf(seg, "e", "Apply E_i", [](Command& c) {
    std::optional<Multisegment> d = c.seg_input();
    for (int k = 0; k < c.opt.reps && d; ++k) d = apply_e(*d, c.opt.i);
    return emit_seg_result(c, d);
  }));
  with_reps(reg.leaf(seg, "f", "Apply F_i", [](Command& c) {
    auto d = c.seg_input();
    for (int k = 0; k < c.opt.reps; ++k) d = apply_f(d, c.opt.i);
    return emit_seg_result(c, d);
  }));
  with_reps(reg.leaf(seg, "ehat", "Apply the hatted E_i", [](Command& c) {
    std::optional<Multisegment> d = c.seg_input();
    for (int k = 0; k < c.opt.reps && d; ++k) d = apply_e_hat(*d, c.opt.i);
    return emit_seg_result(c, d);
  }));
  with_reps(reg.leaf(seg, "fhat", "Apply the hatted F_i", [](Command& c) {
    auto d = c.seg_input();
    for (int k = 0; k < c.opt.reps; ++k) d = apply_f_hat(d, c.opt.i);
    return emit_seg_result(c, d);
  }));
  auto* order = with_file(reg.leaf(seg, "order", "List segments in right or left order",
                                   [](Command& c) {
    const auto d = c.seg_input();
    const auto segs = c.opt.mode == "left" ? left_order(d) : right_order(d);
    Json arr = Json::array();
    for (const auto& s : segs) arr.push_back({s.start(), s.end()});
    c.emit(Json{{"segments", std::move(arr)}});
    return kOk;
  }));
  order->add_option("--mode", o.mode, "right|left")->check(CLI::IsMember({"right", "left"}));
  with_file(reg.leaf(seg, "minlambda", "Smallest weight containing the node", [](Command& c) {
    c.emit(to_json(minimal_weight(c.seg_input())));
    return kOk;
  }));
  with_file(reg.leaf(seg, "path", "Labels of the E-path down to the empty multisegment",
                     [](Command& c) {
    c.emit(Json{{"path", hw_path(c.seg_input())}});
    return kOk;
  }));
}

void define_check(CLI::App& app, Registry& reg, Options& o) {
  auto* check = app.add_subcommand("check", "Membership tests")->require_subcommand(1);
  auto* cyc = reg.leaf(check, "cyclotomic", "Is the multisegment a node of B(lambda)",
                       [](Command& c) {
    c.emit(Json{{"cyclotomic", cyclotomic_check(c.seg_input(), c.lambda())}});
    return kOk;
  });
  cyc->add_option("--lambda", o.lambda, "Weight JSON, e.g. [1,0]")->required();
  cyc->add_option("--file", o.file, "Input JSON (default: stdin)");
  auto* kl = reg.leaf(check, "kleshchev", "Is the multipartition Kleshchev", [](Command& c) {
    c.emit(Json{{"kleshchev", is_kleshchev(c.mp_input())}});
    return kOk;
  });
  kl->add_option("--file", o.file, "Input JSON (default: stdin)");
}

void define_convert(CLI::App& app, Registry& reg, Options& o) {
  auto* conv = app.add_subcommand("convert", "Multisegment <-> multipartition")
                   ->require_subcommand(1);
  auto* s2m = reg.leaf(conv, "seg2mp", "Kleshchev multipartition of a B(lambda) node",
                       [](Command& c) {
    c.emit(to_json(seg_to_mp(c.seg_input(), c.lambda())));
    return kOk;
  });
  s2m->add_option("--lambda", o.lambda, "Weight JSON")->required();
  s2m->add_option("--file", o.file, "Input JSON (default: stdin)");
  auto* m2s = reg.leaf(conv, "mp2seg", "Multisegment of a colored multipartition",
                       [](Command& c) {
    c.emit(to_json(delta_of_mp(c.mp_input())));
    return kOk;
  });
  m2s->add_option("--file", o.file, "Input JSON (default: stdin)");
}

void define_mp(CLI::App& app, Registry& reg, Options& o) {
  auto* mp = app.add_subcommand("mp", "Operators on multipartitions")->require_subcommand(1);
  auto common = [&o](CLI::App* sub) {
    sub->add_option("--i", o.i, "Label")->required();
    sub->add_option("--file", o.file, "Input JSON (default: stdin)");
    return sub;
  };
  common(reg.leaf(mp, "eps", "Uncanceled minus count for E_i", [](Command& c) {
    c.emit(Json{{"eps", eps_mp(c.mp_input(), c.opt.i)}});
    return kOk;
  }));
  common(reg.leaf(mp, "e", "Apply E_i", [](Command& c) {
    std::optional<Multipartition> x = c.mp_input();
    for (int k = 0; k < c.opt.reps && x; ++k) x = apply_e_mp(*x, c.opt.i);
    c.emit(to_json(x));
    return kOk;
  }))->add_option("--reps", o.reps, "Number of applications")->check(CLI::NonNegativeNumber);
  common(reg.leaf(mp, "f", "Apply F_i", [](Command& c) {
    std::optional<Multipartition> x = c.mp_input();
    for (int k = 0; k < c.opt.reps && x; ++k) x = apply_f_mp(*x, c.opt.i);
    c.emit(to_json(x));
    return kOk;
  }))->add_option("--reps", o.reps, "Number of applications")->check(CLI::NonNegativeNumber);
}

Limits char_limits(const Command& c) {
  auto limits = Limits::from_env();
  if (c.opt.bound) limits.characters = *c.opt.bound;
  return limits;
}

void define_char(CLI::App& app, Registry& reg, Options& o) {
  auto* ch = app.add_subcommand("char", "Character of the induced module of a segment list");
  ch->add_option("--bound", o.bound, "Largest total length accepted")
      ->check(CLI::NonNegativeNumber);
  ch->add_option("--file", o.file, "Input JSON (default: stdin)");
  reg.bind(ch, [](Command& c) {
    c.emit(to_json(char_of_ind(segments_from_json(c.input()), char_limits(c))));
    return kOk;
  });
  auto* mult = reg.leaf(ch, "mult", "Multiplicity of one word", [](Command& c) {
    const auto word = parse_json(c.opt.word);
    if (!word.is_array()) throw Error(ErrorKind::InvalidInput, "--word must be a JSON array");
    CharWord w;
    for (const auto& x : word) {
      if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, "--word entries must be integers");
      w.push_back(x.get<int>());
    }
    const auto chr = char_of_ind(segments_from_json(c.input()), char_limits(c));
    c.emit(Json{{"mult", multiplicity(chr, w)}});
    return kOk;
  });
  mult->add_option("--word", o.word, "Word JSON, e.g. [1,2,2]")->required();
  mult->add_option("--file", o.file, "Input JSON (default: stdin)");
  mult->add_option("--bound", o.bound, "Largest total length accepted")
      ->check(CLI::NonNegativeNumber);
}

int emit_graph(Command& c, const CrystalGraph& g) {
  c.emit_text(c.opt.format == "dot" ? to_dot(g) : to_json(g));
  return kOk;
}

void define_graph(CLI::App& app, Registry& reg, Options& o) {
  auto* graph = app.add_subcommand("graph", "Truncated crystal graphs")->require_subcommand(1);
  auto output = [&o](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "Largest node size")->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    sub->add_option("--out", o.out_path, "Output file (default: stdout)");
    return sub;
  };
  auto weighted = [&o, output](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "Weight JSON")->required();
    return output(sub);
  };

  output(reg.leaf(graph, "binf", "B(infinity) on multisegments", [](Command& c) {
    return emit_graph(c, build_binf(parse_contents(c.opt.contents), c.opt.max_n,
                                    Limits::from_env()));
  }))->add_option("--contents", o.contents, "Content range lo..hi")->required();
  weighted(reg.leaf(graph, "blambda-seg", "B(lambda) on multisegments", [](Command& c) {
    return emit_graph(c, build_blambda_seg(c.lambda(), c.opt.max_n, Limits::from_env()));
  }));
  weighted(reg.leaf(graph, "blambda-mp", "B(lambda) on Kleshchev multipartitions",
                    [](Command& c) {
    return emit_graph(c, build_blambda_mp(c.lambda(), c.opt.max_n, Limits::from_env()));
  }));
  weighted(reg.leaf(graph, "tensor", "Component of the empty tensor", [](Command& c) {
    return emit_graph(c, build_tensor_component(c.lambda(), c.opt.max_n, Limits::from_env()));
  }));
  auto* verify = reg.leaf(graph, "verify", "Three-way isomorphism check", [](Command& c) {
    const auto r = verify_three_way(c.lambda(), c.opt.max_n, Limits::from_env());
    Json j{{"seg_vs_mp", r.seg_vs_mp}, {"tensor_vs_mp", r.tensor_vs_mp}};
    if (!r.ok()) j["detail"] = r.detail;
    c.emit(j);
    return r.ok() ? kOk : kVerificationFailure;
  });
  verify->add_option("--lambda", o.lambda, "Weight JSON")->required();
  verify->add_option("--max-n", o.max_n, "Largest node size")->required()
      ->check(CLI::NonNegativeNumber);
}

void define_selfcheck(CLI::App& app, Registry& reg, Options& o) {
  auto* sc = reg.leaf(&app, "selfcheck", "Run the invariant suites", [](Command& c) {
    const auto level = c.opt.level == "full" ? CheckLevel::Full : CheckLevel::Quick;
    bool ok = true;
    for (const auto& r : run_selfcheck(level)) {
      Json j{{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}};
      if (!r.ok()) j["first_failure"] = r.first_failure;
      c.emit(j);
      ok = ok && r.ok();
    }
    return ok ? kOk : kVerificationFailure;
  });
  sc->add_option("--level", o.level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Command cmd(in, out);
  Registry reg;
  CLI::App app{"Crystal operators on multisegments and multipartitions", "mseg"};
  app.require_subcommand(1);
  define_seg(app, reg, cmd.opt);
  define_check(app, reg, cmd.opt);
  define_convert(app, reg, cmd.opt);
  define_mp(app, reg, cmd.opt);
  define_char(app, reg, cmd.opt);
  define_graph(app, reg, cmd.opt);
  define_selfcheck(app, reg, cmd.opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kUsage;
  }

  const Action* action = reg.chosen(app);
  if (action == nullptr) {
    report(err, "UsageError", "no command given");
    return kUsage;
  }
  try {
    return (*action)(cmd);
  } catch (const Error& e) {
    report(err, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  } catch (const UsageError& e) {
    report(err, "UsageError", e.what());
    return kUsage;
  }
}

}  // namespace mseg::tools

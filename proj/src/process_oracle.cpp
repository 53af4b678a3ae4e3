#include <cerrno>
#include <cstring>
#include <sstream>

#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include "homcount/adaptive.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph6.hpp"

namespace homcount {

std::string oracle_request(MorphismKind kind, const Query& q) {
  std::string line(kind_name(kind));
  line += ' ';
  if (const auto* g = std::get_if<Graph>(&q)) return line + to_graph6(*g);
  line += "sum:";
  bool first = true;
  for (const auto& p : std::get<GraphSum>(q).parts()) {
    if (!first) line += ',';
    first = false;
    line += p.copies.get_str() + '*' + to_graph6(p.component);
  }
  return line;
}

std::pair<MorphismKind, Query> parse_oracle_request(std::string_view line) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos) throw ParseError("expected '<kind> <graph6>'", line.size());
  MorphismKind kind;
  try {
    kind = parse_kind(line.substr(0, space));
  } catch (const std::invalid_argument&) {
    throw ParseError("unknown count kind '" + std::string(line.substr(0, space)) + "'", 0);
  }
  std::string_view body = line.substr(space + 1);
  if (!body.starts_with("sum:")) {
    try {
      return {kind, from_graph6(body)};
    } catch (const ParseError& e) {
      throw ParseError("bad graph6", space + 1 + e.offset());
    }
  }
  GraphSum sum;
  std::size_t pos = space + 5;
  body.remove_prefix(4);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view term = body.substr(0, comma);
    const auto star = term.find('*');
    if (star == std::string_view::npos || star == 0) throw ParseError("expected '<copies>*<graph6>'", pos);
    const std::string copies(term.substr(0, star));
    if (copies.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad multiplicity", pos);
    try {
      sum.add(from_graph6(term.substr(star + 1)), mpz_class(copies));
    } catch (const ParseError& e) {
      throw ParseError("bad graph6", pos + star + 1 + e.offset());
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    pos += comma + 1;
  }
  if (sum.empty()) throw ParseError("empty sum", pos);
  if (kind != MorphismKind::hom) throw ParseError("sums can only be counted with hom", 0);
  return {kind, std::move(sum)};
}

std::size_t serve_oracle(const Graph& hidden, Orientation orientation, std::FILE* in, std::FILE* out) {
  GraphOracle oracle(hidden, orientation);
  std::size_t served = 0;
  char* buffer = nullptr;
  std::size_t capacity = 0;
  ssize_t len;
  while ((len = ::getline(&buffer, &capacity, in)) >= 0) {
    std::string_view line(buffer, static_cast<std::size_t>(len));
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    std::string response;
    try {
      auto [kind, q] = parse_oracle_request(line);
      if (const auto* g = std::get_if<Graph>(&q))
        response = oracle.query(*g, kind).get_str();
      else
        response = oracle.query(std::get<GraphSum>(q)).to_string();
    } catch (const std::exception& e) {
      response = std::string("error ") + e.what();
    }
    std::fprintf(out, "%s\n", response.c_str());
    std::fflush(out);
    ++served;
  }
  std::free(buffer);
  return served;
}

ProcessOracle::ProcessOracle(const std::string& command, Orientation orientation) : HomOracle(orientation) {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) != 0)
    throw Error(std::string("cannot create oracle channel: ") + std::strerror(errno));
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw Error(std::string("cannot start oracle process: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::close(fds[0]);
    ::dup2(fds[1], STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::close(fds[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(fds[1]);
  to_child_ = from_child_ = fds[0];
  pid_ = pid;
}

ProcessOracle::~ProcessOracle() {
  if (to_child_ >= 0) {
    ::shutdown(to_child_, SHUT_WR);
    ::close(to_child_);
  }
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
}

std::string ProcessOracle::round_trip(const std::string& request) {
  const std::string line = request + '\n';
  std::size_t sent = 0;
  while (sent < line.size()) {
    const ssize_t w = ::send(to_child_, line.data() + sent, line.size() - sent, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("oracle process is gone: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(w);
  }
  while (true) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string reply = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!reply.empty() && reply.back() == '\r') reply.pop_back();
      if (reply.starts_with("error")) throw Error("oracle process reported: " + reply);
      return reply;
    }
    char chunk[4096];
    const ssize_t r = ::read(from_child_, chunk, sizeof chunk);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) throw Error("oracle process closed the connection");
    buffer_.append(chunk, static_cast<std::size_t>(r));
  }
}

CountValue ProcessOracle::answer(MorphismKind kind, const Graph& f) {
  const std::string reply = round_trip(oracle_request(kind, f));
  if (reply.empty() || reply.find_first_not_of("0123456789") != std::string::npos)
    throw Error("oracle process sent a malformed count: '" + reply + "'");
  return CountValue(reply);
}

FactoredCount ProcessOracle::answer_sum(const GraphSum& f) {
  const std::string reply = round_trip(oracle_request(MorphismKind::hom, f));
  try {
    return FactoredCount::parse(reply);
  } catch (const ParseError&) {
    throw Error("oracle process sent a malformed count: '" + reply + "'");
  }
}

}  // namespace homcount

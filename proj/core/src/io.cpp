#include "kpartite/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kpartite/errors.hpp"

namespace kpartite {

namespace {

// Reads one \n-terminated line. Returns false at a clean end of input;
// content that raw-ends without a newline is a format error.
bool read_line(std::istream& input, std::string& line, std::uint64_t line_number) {
  if (!std::getline(input, line)) return false;
  if (input.eof()) {
    throw ParseError("line " + std::to_string(line_number) + ": missing final newline");
  }
  return true;
}

// Strict field scanner: single spaces between canonical decimal fields.
class FieldScanner {
 public:
  FieldScanner(const std::string& line, std::uint64_t line_number)
      : cursor_(line.data()), end_(line.data() + line.size()), line_number_(line_number) {}

  template <typename Int>
  Int next() {
    if (started_ && !consume_space()) {
      throw error("expected a single space between fields");
    }
    if (cursor_ == end_ || *cursor_ < '0' || *cursor_ > '9') {
      throw error("expected a decimal field");
    }
    if (*cursor_ == '0' && cursor_ + 1 != end_ && cursor_[1] >= '0' && cursor_[1] <= '9') {
      throw error("non-canonical decimal (leading zero)");
    }
    Int value{};
    auto [ptr, ec] = std::from_chars(cursor_, end_, value);
    if (ec != std::errc{}) throw error("decimal field out of range");
    cursor_ = ptr;
    started_ = true;
    return value;
  }

  void finish() const {
    if (cursor_ != end_) throw error("trailing characters on line");
  }

 private:
  bool consume_space() {
    if (cursor_ == end_ || *cursor_ != ' ') return false;
    ++cursor_;
    return true;
  }
  ParseError error(const std::string& message) const {
    return ParseError("line " + std::to_string(line_number_) + ": " + message);
  }

  const char* cursor_;
  const char* end_;
  std::uint64_t line_number_;
  bool started_ = false;
};

void append_u64(std::string& out, std::uint64_t value) {
  char buffer[20];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  out.append(buffer, ptr);
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& input, EdgeStoreKind kind) {
  std::string line;
  if (!read_line(input, line, 1) || line != "kuh 1") {
    throw ParseError("line 1: expected magic 'kuh 1'");
  }
  if (!read_line(input, line, 2)) throw ParseError("line 2: missing header");
  FieldScanner header(line, 2);
  const auto uniformity = header.next<std::uint32_t>();
  const auto vertex_count = header.next<std::uint32_t>();
  const auto edge_count = header.next<std::uint64_t>();
  header.finish();
  if (uniformity < 1) throw ParseError("line 2: uniformity must be at least 1");

  ColexTable table(vertex_count, uniformity);  // InstanceTooLarge on overflow
  if (edge_count > table.universe()) {
    throw ParseError("line 2: edge count exceeds the number of possible edges");
  }

  const bool use_bitset =
      kind == EdgeStoreKind::kRankBitset ||
      (kind == EdgeStoreKind::kAuto && table.universe() <= edge_store_bit_budget());
  DynamicBitset bits(use_bitset ? table.universe() : 0);
  std::vector<std::uint64_t> ranks;
  if (!use_bitset) ranks.reserve(edge_count);
  std::vector<std::uint64_t> degrees(vertex_count, 0);

  std::vector<std::uint32_t> edge(uniformity);
  bool have_previous = false;
  std::uint64_t previous_rank = 0;
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const std::uint64_t line_number = 3 + i;
    if (!read_line(input, line, line_number)) {
      throw ParseError("line " + std::to_string(line_number) + ": missing edge line");
    }
    FieldScanner fields(line, line_number);
    std::uint64_t rank = 0;
    for (std::uint32_t j = 0; j < uniformity; ++j) {
      const auto vertex = fields.next<std::uint32_t>();
      if (vertex >= vertex_count) {
        throw ParseError("line " + std::to_string(line_number) + ": vertex out of range");
      }
      if (j > 0 && edge[j - 1] >= vertex) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": vertex ids must be strictly increasing");
      }
      edge[j] = vertex;
      rank += table.choose(vertex, j + 1);
      ++degrees[vertex];
    }
    fields.finish();
    if (have_previous && rank <= previous_rank) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": edges must be in ascending colex order without duplicates");
    }
    previous_rank = rank;
    have_previous = true;
    if (use_bitset) {
      bits.set(rank);
    } else {
      ranks.push_back(rank);
    }
  }
  if (read_line(input, line, 3 + edge_count)) {
    throw ParseError("line " + std::to_string(3 + edge_count) + ": trailing data");
  }

  if (use_bitset) {
    Hypergraph graph = Hypergraph::from_rank_bitset(vertex_count, uniformity, std::move(bits),
                                                    edge_count, std::move(degrees));
    return graph;
  }
  return Hypergraph::from_ranks(vertex_count, uniformity, std::move(ranks),
                                EdgeStoreKind::kSortedIndex, std::move(degrees));
}

void render_hypergraph(const Hypergraph& graph, std::ostream& output) {
  std::string buffer;
  buffer.reserve(1 << 20);
  buffer += "kuh 1\n";
  append_u64(buffer, graph.uniformity());
  buffer += ' ';
  append_u64(buffer, graph.vertex_count());
  buffer += ' ';
  append_u64(buffer, graph.edge_count());
  buffer += '\n';
  graph.for_each_edge([&](std::span<const std::uint32_t> edge) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i > 0) buffer += ' ';
      append_u64(buffer, edge[i]);
    }
    buffer += '\n';
    if (buffer.size() >= (1 << 20)) {
      output.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  });
  output.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

std::string render_hypergraph(const Hypergraph& graph) {
  std::ostringstream out;
  render_hypergraph(graph, out);
  return out.str();
}

PartiteWitness parse_witness(std::istream& input) {
  std::string line;
  if (!read_line(input, line, 1) || line != "kuw 1") {
    throw ParseError("line 1: expected magic 'kuw 1'");
  }
  if (!read_line(input, line, 2)) throw ParseError("line 2: missing part count");
  FieldScanner header(line, 2);
  const auto part_count = header.next<std::uint32_t>();
  header.finish();
  if (part_count < 1) throw ParseError("line 2: part count must be at least 1");

  PartiteWitness witness;
  witness.source_uniformity = part_count;
  witness.parts.reserve(part_count);
  for (std::uint32_t i = 0; i < part_count; ++i) {
    const std::uint64_t line_number = 3 + i;
    if (!read_line(input, line, line_number)) {
      throw ParseError("line " + std::to_string(line_number) + ": missing part line");
    }
    FieldScanner fields(line, line_number);
    const auto size = fields.next<std::uint64_t>();
    std::vector<std::uint32_t> part;
    part.reserve(size);
    for (std::uint64_t j = 0; j < size; ++j) {
      const auto vertex = fields.next<std::uint32_t>();
      if (!part.empty() && part.back() >= vertex) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": part ids must be strictly increasing");
      }
      part.push_back(vertex);
    }
    fields.finish();
    witness.parts.push_back(std::move(part));
  }
  if (read_line(input, line, 3 + part_count)) {
    throw ParseError("line " + std::to_string(3 + part_count) + ": trailing data");
  }
  return witness;
}

void render_witness(const PartiteWitness& witness, std::ostream& output) {
  std::string buffer = "kuw 1\n";
  append_u64(buffer, witness.parts.size());
  buffer += '\n';
  for (const auto& part : witness.parts) {
    append_u64(buffer, part.size());
    for (std::uint32_t vertex : part) {
      buffer += ' ';
      append_u64(buffer, vertex);
    }
    buffer += '\n';
  }
  output.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

std::string render_witness(const PartiteWitness& witness) {
  std::ostringstream out;
  render_witness(witness, out);
  return out.str();
}

}  // namespace kpartite

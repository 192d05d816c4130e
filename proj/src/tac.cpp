// evmlift: context-sensitive EVM bytecode lifter
// Copyright 2026 The evmlift Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmlift/opcodes.hpp>
#include <evmlift/tac.hpp>

#include <algorithm>
#include <charconv>

namespace evmlift
{
namespace
{
constexpr std::string_view separator = "=================================";

std::string join_ids(const std::vector<BlockId>& ids)
{
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i)
    {
        if (i != 0)
            s += ", ";
        s += to_hex(ids[i]);
    }
    return s;
}

std::optional<u256> parse_hex_u256(std::string_view s)
{
    if (!s.starts_with("0x") || s.size() < 3 || s.size() > 66)
        return std::nullopt;
    u256 v = 0;
    for (const char c : s.substr(2))
    {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            return std::nullopt;
        v = (v << 4) | d;
    }
    // Canonical form only, so rendering reproduces the input.
    if (to_hex(v) != s)
        return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s, std::string_view sep)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true)
    {
        const auto next = s.find(sep, pos);
        if (next == std::string_view::npos)
        {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

TacOperand parse_operand(std::string_view s, std::size_t line)
{
    TacOperand op;
    const auto paren = s.find('(');
    if (paren == std::string_view::npos)
    {
        op.name = std::string(s);
    }
    else
    {
        if (!s.ends_with(")"))
            throw TacParseError(line, "unterminated constant annotation");
        op.name = std::string(s.substr(0, paren));
        op.constant = parse_hex_u256(s.substr(paren + 1, s.size() - paren - 2));
        if (!op.constant)
            throw TacParseError(line, "bad constant in operand '" + std::string(s) + "'");
    }
    if (op.name.empty() || op.name.find_first_of(" ,=") != std::string::npos)
        throw TacParseError(line, "bad operand '" + std::string(s) + "'");
    return op;
}

std::vector<BlockId> parse_id_list(std::string_view s, std::size_t line)
{
    std::vector<BlockId> ids;
    if (s.empty())
        return ids;
    for (const auto part : split(s, ", "))
    {
        const auto v = parse_hex_u256(part);
        if (!v || !fits_u64(*v))
            throw TacParseError(line, "bad block id '" + std::string(part) + "'");
        ids.push_back(static_cast<BlockId>(*v));
    }
    return ids;
}
}  // namespace

std::string_view TacBlock::terminator_op() const
{
    return statements.empty() ? std::string_view{} : std::string_view{statements.back().op};
}

std::size_t TacBlock::required_successors() const
{
    const auto op = terminator_op();
    if (op == "JUMPI")
        return 2;
    if (op == "RETURNPRIVATE")
        return 0;
    if (const auto code = opcode_from_name(op); code && opcode_info(*code).halts)
        return 0;
    return 1;
}

std::size_t TacBlock::allowed_successors() const
{
    return terminator_op() == "JUMPI" ? 2 : required_successors();
}

const TacBlock* TacProgram::find(BlockId id) const
{
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), id,
        [](const TacBlock& b, BlockId v) { return b.id < v; });
    return (it != blocks.end() && it->id == id) ? &*it : nullptr;
}

std::string render_operand(const TacOperand& operand)
{
    if (!operand.constant)
        return operand.name;
    return operand.name + "(" + to_hex(*operand.constant) + ")";
}

std::string render_statement(const TacStatement& stmt)
{
    std::string s = stmt.pc_label + ": ";
    if (stmt.def)
        s += render_operand(*stmt.def) + " = ";
    s += stmt.op;
    for (std::size_t i = 0; i < stmt.operands.size(); ++i)
    {
        s += i == 0 ? " " : ", ";
        s += render_operand(stmt.operands[i]);
    }
    return s;
}

std::string render_tac(const TacProgram& program)
{
    std::string out;
    for (const auto& block : program.blocks)
    {
        out += "Begin block " + to_hex(block.id) + "\n";
        out += "prev=[" + join_ids(block.preds) + "], succ=[" + join_ids(block.succs) + "]\n";
        out += separator;
        out += "\n";
        for (const auto& stmt : block.statements)
            out += render_statement(stmt) + "\n";
        out += "\n";
    }
    return out;
}

TacProgram parse_tac(std::string_view text)
{
    TacProgram program;
    auto lines = split(text, "\n");
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();

    std::size_t i = 0;
    while (i < lines.size())
    {
        const auto line_no = i + 1;
        const auto header = lines[i];
        if (!header.starts_with("Begin block "))
            throw TacParseError(line_no, "expected 'Begin block'");
        TacBlock block;
        const auto id = parse_hex_u256(header.substr(12));
        if (!id || !fits_u64(*id))
            throw TacParseError(line_no, "bad block id");
        block.id = static_cast<BlockId>(*id);

        const auto edges = i + 1 < lines.size() ? lines[i + 1] : std::string_view{};
        if (!edges.starts_with("prev=[") || !edges.ends_with("]"))
            throw TacParseError(line_no + 1, "expected prev/succ line");
        const auto mid = edges.find("], succ=[");
        if (mid == std::string_view::npos)
            throw TacParseError(line_no + 1, "expected succ list");
        block.preds = parse_id_list(edges.substr(6, mid - 6), line_no + 1);
        block.succs = parse_id_list(
            edges.substr(mid + 9, edges.size() - mid - 10), line_no + 1);
        if (i + 2 >= lines.size() || lines[i + 2] != separator)
            throw TacParseError(line_no + 2, "expected separator");

        i += 3;
        for (; i < lines.size() && !lines[i].empty(); ++i)
        {
            const auto line = lines[i];
            const auto colon = line.find(": ");
            if (colon == std::string_view::npos)
                throw TacParseError(i + 1, "expected 'pc: statement'");
            TacStatement stmt;
            stmt.pc_label = std::string(line.substr(0, colon));
            auto rest = line.substr(colon + 2);
            if (const auto eq = rest.find(" = "); eq != std::string_view::npos)
            {
                stmt.def = parse_operand(rest.substr(0, eq), i + 1);
                rest = rest.substr(eq + 3);
            }
            const auto space = rest.find(' ');
            stmt.op = std::string(rest.substr(0, space));
            if (stmt.op.empty())
                throw TacParseError(i + 1, "missing op");
            if (space != std::string_view::npos)
            {
                for (const auto part : split(rest.substr(space + 1), ", "))
                    stmt.operands.push_back(parse_operand(part, i + 1));
            }
            block.statements.push_back(std::move(stmt));
        }
        if (i < lines.size())
            ++i;  // blank line after the block
        if (!program.blocks.empty() && program.blocks.back().id >= block.id)
            throw TacParseError(line_no, "blocks not in ascending order");
        program.blocks.push_back(std::move(block));
    }
    return program;
}
}  // namespace evmlift

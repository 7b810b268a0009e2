#!/usr/bin/env python3
# Copyright 2026 The WDApp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracle for the golden vectors under vectors/.

Uses only hashlib, the `cryptography` Ed25519 implementation and a
stand-alone canonical encoder. Shares no code with the C++ tree. Run once;
the output files are frozen and checked in.

    python3 tests/oracles/gen_vectors.py vectors/
"""

import hashlib
import json
import pathlib
import sys

from cryptography.hazmat.primitives import serialization
from cryptography.hazmat.primitives.asymmetric.ed25519 import Ed25519PrivateKey

RAW = serialization.Encoding.Raw


def sha256(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def hx(b: bytes) -> str:
    return "0x" + b.hex()


def normalize(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        if v < 0:
            raise ValueError("negative")
        return str(v)
    if isinstance(v, (bytes, bytearray)):
        return hx(bytes(v))
    if isinstance(v, str):
        return v
    if isinstance(v, dict):
        return {k: normalize(x) for k, x in v.items()}
    if isinstance(v, list):
        return [normalize(x) for x in v]
    raise TypeError(type(v))


def canonical(v) -> bytes:
    return json.dumps(normalize(v), sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def keypair(seed: bytes):
    sk = Ed25519PrivateKey.from_private_bytes(seed)
    pk = sk.public_key().public_bytes(RAW, serialization.PublicFormat.Raw)
    return sk, pk


def address(pk: bytes) -> bytes:
    return sha256(pk)[12:]


def seed_of(label: str) -> bytes:
    return sha256(label.encode())


def merkle(hashes):
    if not hashes:
        return sha256(b"")
    level = list(hashes)
    while True:
        if len(level) % 2 == 1:
            level.append(level[-1])
        level = [sha256(level[i] + level[i + 1]) for i in range(0, len(level), 2)]
        if len(level) == 1:
            return level[0]


def header_hash(h) -> bytes:
    return sha256(canonical(h))


def meets(digest: bytes, d: int) -> bool:
    return int.from_bytes(digest, "big") < (1 << (256 - d))


# --- crypto ---------------------------------------------------------------


def crypto_vectors():
    out = []
    cases = [
        (bytes(32), b""),
        (bytes(range(32)), b"abc"),
        (seed_of("alice"), b"ProjCoin"),
        (seed_of("bob"), bytes(range(256))),
        (bytes([0xFF] * 32), "tokenize everything é世".encode()),
    ]
    for seed, message in cases:
        sk, pk = keypair(seed)
        digest = sha256(message)
        sig = sk.sign(digest)
        out.append(
            {
                "seed": hx(seed),
                "public_key": hx(pk),
                "address": hx(address(pk)),
                "message": hx(message),
                "digest": hx(digest),
                "signature": hx(sig),
            }
        )
    return out


# --- transactions ---------------------------------------------------------


def sign_tx(tx, sk):
    body = {k: v for k, v in tx.items() if k != "signature"}
    digest = sha256(canonical(body))
    full = dict(body, signature=sk.sign(digest))
    return full, digest, sha256(canonical(full))


def contract_addr(deployer: bytes, nonce: int) -> bytes:
    return sha256(canonical({"deployer": deployer, "nonce": nonce}))[12:]


ALICE_SK, ALICE_PK = keypair(seed_of("alice"))
BOB_SK, BOB_PK = keypair(seed_of("bob"))
CAROL_SK, CAROL_PK = keypair(seed_of("carol"))
ALICE, BOB, CAROL = address(ALICE_PK), address(BOB_PK), address(CAROL_PK)


def tx(nonce, action, gas_limit, gas_price=1, chain_id=7):
    return {
        "chain_id": chain_id,
        "from": ALICE,
        "nonce": nonce,
        "action": action,
        "gas_limit": gas_limit,
        "gas_price": gas_price,
    }


def call(contract, method, args):
    return {"type": "token_call", "contract": contract, "call": {"method": method, "args": args}}


def transaction_vectors():
    c = contract_addr(ALICE, 1)
    n = contract_addr(ALICE, 2)
    cases = [
        ("native_transfer", tx(0, {"type": "native_transfer", "to": BOB, "amount": 40}, 21000)),
        (
            "deploy_fungible",
            tx(1, {"type": "deploy_fungible", "name": "ProjCoin", "symbol": "PBJ", "decimals": 18,
                   "total_supply": 10**24}, 100000, 3),
        ),
        ("deploy_nft", tx(2, {"type": "deploy_nft", "name": "DeedRegistry", "symbol": "DEED"}, 120000)),
        ("ft_transfer", tx(3, call(c, "ft_transfer", {"to": BOB, "amount": 2**200}), 21000)),
        ("ft_approve", tx(4, call(c, "ft_approve", {"spender": CAROL, "amount": 50}), 10000)),
        ("ft_transfer_from", tx(5, call(c, "ft_transfer_from", {"from": BOB, "to": CAROL, "amount": 1}), 30000)),
        ("ft_mint", tx(6, call(c, "ft_mint", {"to": CAROL, "amount": 10}), 25000)),
        ("ft_burn", tx(7, call(c, "ft_burn", {"amount": 0}), 20000)),
        ("transfer_ownership", tx(8, call(c, "transfer_ownership", {"new_owner": BOB}), 10000)),
        ("nft_mint", tx(9, call(n, "nft_mint", {"to": BOB, "token_id": 1, "uri": "ipfs://deed/1"}), 40000)),
        ("nft_transfer_from", tx(10, call(n, "nft_transfer_from", {"from": BOB, "to": CAROL, "token_id": 1}), 30000)),
        ("nft_approve", tx(11, call(n, "nft_approve", {"approved": CAROL, "token_id": 1}), 10000)),
        (
            "nft_set_approval_for_all",
            tx(12, call(n, "nft_set_approval_for_all", {"operator": BOB, "approved": True}), 10000),
        ),
        ("nft_burn", tx(13, call(n, "nft_burn", {"token_id": 1}), 20000, 2**128)),
    ]
    out = []
    for name, t in cases:
        full, digest, h = sign_tx(t, ALICE_SK)
        out.append(
            {
                "name": name,
                "seed": hx(seed_of("alice")),
                "tx": normalize(full),
                "canonical": canonical(full).decode(),
                "signing_digest": hx(digest),
                "tx_hash": hx(h),
            }
        )
    return out


# --- ledger ---------------------------------------------------------------


def genesis(config):
    header = {
        "number": 0,
        "parent_hash": bytes(32),
        "timestamp": 0,
        "difficulty": config["difficulty"],
        "merkle_root": merkle([]),
        "nonce": 0,
    }
    accounts = {}
    for a, amount in config["allocations"].items():
        accounts.setdefault(a, {"nonce": 0, "native_balance": 0})["native_balance"] = amount
    for a, pk in config["registered_keys"].items():
        accounts.setdefault(a, {"nonce": 0, "native_balance": 0})["public_key"] = pk
    state = {
        "chain_id": config["chain_id"],
        "difficulty": config["difficulty"],
        "accounts": accounts,
        "contracts": {},
        "head": header_hash(header),
        "height": 0,
        "total_issued": sum(config["allocations"].values()),
        "burned_fees": 0,
    }
    return header, state


def state_digest(state) -> bytes:
    rendered = dict(state)
    rendered["accounts"] = {hx(a): v for a, v in state["accounts"].items()}
    rendered["contracts"] = {hx(a): v for a, v in state["contracts"].items()}
    return sha256(canonical(rendered))


GAS = {"native_transfer": 21000, "deploy_fungible": 100000, "ft_transfer": 21000, "ft_burn": 20000}


def apply_tx(state, t, number, index, h):
    """Executes the subset of actions used by the block vector."""
    action = t["action"]
    kind = action["type"] if action["type"] != "token_call" else action["call"]["method"]
    used = GAS[kind]
    sender = state["accounts"][t["from"]]
    sender["native_balance"] -= t["gas_limit"] * t["gas_price"]
    receipt = {"tx_hash": h, "status": "Success", "block_number": number, "tx_index": index, "gas_used": used}
    if kind == "native_transfer":
        if sender["native_balance"] < action["amount"]:
            receipt.update(status="Reverted", error="InsufficientBalance")
        else:
            sender["native_balance"] -= action["amount"]
            r = state["accounts"].setdefault(action["to"], {"nonce": 0, "native_balance": 0})
            r["native_balance"] += action["amount"]
    elif kind == "deploy_fungible":
        addr = contract_addr(t["from"], t["nonce"])
        supply = action["total_supply"]
        state["contracts"][addr] = {
            "kind": "ft",
            "name": action["name"],
            "symbol": action["symbol"],
            "decimals": action["decimals"],
            "total_supply": supply,
            "owner": t["from"],
            "balances": {hx(t["from"]): supply} if supply else {},
            "allowances": {},
        }
        receipt["contract_address"] = addr
    else:
        ft = state["contracts"][action["contract"]]
        args = action["call"]["args"]
        src = hx(t["from"])
        bal = ft["balances"].get(src, 0)
        if kind == "ft_transfer":
            amount = args["amount"]
            if bal < amount:
                receipt.update(status="Reverted", error="InsufficientBalance")
            elif amount:
                ft["balances"][src] = bal - amount
                if not ft["balances"][src]:
                    del ft["balances"][src]
                dst = hx(args["to"])
                ft["balances"][dst] = ft["balances"].get(dst, 0) + amount
        elif kind == "ft_burn":
            amount = args["amount"]
            if bal < amount:
                receipt.update(status="Reverted", error="InsufficientBalance")
            elif amount:
                ft["balances"][src] = bal - amount
                if not ft["balances"][src]:
                    del ft["balances"][src]
                ft["total_supply"] -= amount
    fee = used * t["gas_price"]
    sender["native_balance"] += t["gas_limit"] * t["gas_price"] - fee
    state["burned_fees"] += fee
    sender["nonce"] += 1
    return receipt


def ledger_vectors():
    config = {
        "chain_id": 7,
        "difficulty": 8,
        "allocations": {ALICE: 10**9, CAROL: 5},
        "registered_keys": {ALICE: ALICE_PK, BOB: BOB_PK},
    }
    g_header, state = genesis(config)
    g_digest = state_digest(state)

    c = contract_addr(ALICE, 1)
    plan = [
        tx(0, {"type": "native_transfer", "to": BOB, "amount": 40}, 21000),
        tx(1, {"type": "deploy_fungible", "name": "ProjCoin", "symbol": "PBJ", "decimals": 18, "total_supply": 1000000},
           150000, 2),
        tx(2, call(c, "ft_transfer", {"to": BOB, "amount": 250}), 21000),
        tx(3, call(c, "ft_transfer", {"to": BOB, "amount": 10**7}), 30000),
        tx(4, call(c, "ft_burn", {"amount": 1}), 20000),
        tx(5, {"type": "native_transfer", "to": CAROL, "amount": 5}, 21000, 0),
    ]
    signed = [sign_tx(t, ALICE_SK) for t in plan]
    txs = [s[0] for s in signed]
    hashes = [s[2] for s in signed]
    receipts = [apply_tx(state, t, 1, i, h) for i, (t, h) in enumerate(zip(txs, hashes))]

    header = {
        "number": 1,
        "parent_hash": header_hash(g_header),
        "timestamp": 1700000000,
        "difficulty": 8,
        "merkle_root": merkle(hashes),
        "nonce": 0,
    }
    while not meets(header_hash(header), 8):
        header["nonce"] += 1
    state["head"] = header_hash(header)
    state["height"] = 1

    h1, h2, h3 = sha256(b"h1"), sha256(b"h2"), sha256(b"h3")
    return {
        "hash": [
            {"input": hx(b""), "digest": hx(sha256(b""))},
            {"input": hx(b"abc"), "digest": hx(sha256(b"abc"))},
        ],
        "merkle": [
            {"leaves": [], "root": hx(merkle([]))},
            {"leaves": [hx(h1)], "root": hx(merkle([h1]))},
            {"leaves": [hx(h1), hx(h2)], "root": hx(merkle([h1, h2]))},
            {"leaves": [hx(h1), hx(h2), hx(h3)], "root": hx(sha256(sha256(h1 + h2) + sha256(h3 + h3)))},
        ],
        "contract_address": [
            {"deployer": hx(ALICE), "nonce": 1, "address": hx(c)},
            {"deployer": hx(ALICE), "nonce": 2, "address": hx(contract_addr(ALICE, 2))},
        ],
        "genesis": {
            "config": normalize(config | {"allocations": {hx(a): v for a, v in config["allocations"].items()},
                                          "registered_keys": {hx(a): v for a, v in config["registered_keys"].items()}}),
            "header_hash": hx(header_hash(g_header)),
            "state_digest": hx(g_digest),
        },
        "block": {
            "block": normalize({"header": header, "transactions": txs}),
            "header_hash": hx(header_hash(header)),
            "receipts": normalize(receipts),
            "state_digest": hx(state_digest(state)),
        },
    }


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "vectors")
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "crypto.json": crypto_vectors(),
        "transactions.json": transaction_vectors(),
        "ledger.json": ledger_vectors(),
    }
    for name, data in files.items():
        (out / name).write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()

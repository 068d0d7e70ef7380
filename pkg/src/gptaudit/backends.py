"""Chat-model backend contract and implementations.

Every prompt this package assembles embeds exactly one machine-readable
input block (see :func:`format_input_block`).  Real backends answer from
the natural-language instructions; the bundled mock parses the block and
answers with deterministic keyword heuristics so the whole pipeline runs
hermetically.  The mock is a stand-in for offline tests and demos, not a
substitute for a real model.
"""

from __future__ import annotations

import json
import re
from typing import Protocol, runtime_checkable

from gptaudit.errors import BackendUnavailable
from gptaudit.taxonomy import OTHER, Taxonomy

INPUT_BLOCK_START = "<<<INPUT"
INPUT_BLOCK_END = "INPUT>>>"


@runtime_checkable
class ModelBackend(Protocol):
    """Minimal contract: one prompt in, one text completion out."""

    identity: str
    deterministic: bool

    def complete(self, prompt: str) -> str: ...


def format_input_block(payload: dict) -> str:
    """Serialize the structured task input carried inside a prompt."""
    body = json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2)
    return f"{INPUT_BLOCK_START}\n{body}\n{INPUT_BLOCK_END}"


def parse_input_block(prompt: str) -> dict:
    start = prompt.index(INPUT_BLOCK_START) + len(INPUT_BLOCK_START)
    end = prompt.index(INPUT_BLOCK_END, start)
    return json.loads(prompt[start:end])


class ScriptedBackend:
    """Test backend that replays a fixed list of responses in order."""

    deterministic = True

    def __init__(self, responses: list[str], identity: str = "scripted") -> None:
        self._responses = list(responses)
        self._cursor = 0
        self.identity = identity
        self.prompts: list[str] = []

    def complete(self, prompt: str) -> str:
        self.prompts.append(prompt)
        if self._cursor >= len(self._responses):
            raise AssertionError("scripted backend exhausted")
        response = self._responses[self._cursor]
        self._cursor += 1
        return response


class FailingBackend:
    """Test backend whose transport always fails."""

    deterministic = True
    identity = "failing"

    def complete(self, prompt: str) -> str:
        raise BackendUnavailable("simulated transport failure")


# Ordered keyword rules for the mock classifier; first word-boundary match
# wins.  Every target label must resolve in the taxonomy the mock is
# constructed with.
_CLASSIFY_RULES: list[tuple[str, str, str]] = [
    ("password", "Security credentials", "Password"),
    ("api key|api_key|apikey", "Security credentials", "API key"),
    ("access token|bearer token|auth token|oauth token", "Security credentials", "Access tokens"),
    ("verification code|one-time code", "Security credentials", "Verification code"),
    ("x-ray|xray|medical|diagnosis|symptom", "Health information", "Medical record"),
    ("fitness|workout|exercise", "Health information", "Fitness information"),
    ("email", "Personal information", "Email address"),
    ("phone", "Personal information", "Phone number"),
    ("birthday|date of birth", "Personal information", "Birthday"),
    ("gender", "Personal information", "Gender"),
    ("mailing address", "Personal information", "Mailing address"),
    ("occupation|employer", "Personal information", "Work"),
    ("nickname", "Personal information", "Nickname"),
    ("user id|user identifier|account of the user", "Identifier", "User identifiers"),
    ("device id", "Identifier", "Device IDs"),
    ("order id|order number|booking reference", "Identifier", "Ticket and order identifiers"),
    ("resource id", "Identifier", "Resource IDs"),
    ("license plate", "Identifier", "License plate number"),
    ("vin", "Identifier", "Vehicle identification number (VIN)"),
    ("city|commune|municipality", "Location", "City"),
    ("country", "Location", "Country"),
    ("postcode|postal code|zip code", "Location", "Postcode"),
    ("latitude|longitude|coordinates|gps", "Location", "GPS coordinates"),
    ("origin|destination|airport", "Location", "Origin/destination"),
    ("route|itinerary", "Location", "Route"),
    ("region", "Location", "Region"),
    ("address", "Location", "Exact address"),
    ("location", "Location", "General location"),
    ("timezone|time zone", "Time", "Timezone"),
    ("timestamp|unix", "Time", "Timestamp"),
    ("date range|time period|start time|end time", "Time", "Time period"),
    ("date", "Time", "Date"),
    ("frequency", "Time", "Frequency"),
    ("query filter|filter", "Query", "Query filter"),
    ("search|query|keyword", "Query", "Search query"),
    ("prompt", "Query", "Generative prompt"),
    ("user-agent|user agent", "Web and network data", "User-Agent strings"),
    ("ip address", "Web and network data", "IP addresses"),
    ("cookie", "Web and network data", "Cookies"),
    ("domain", "Web and network data", "Domain names"),
    ("url|link|website", "Web and network data", "URLs"),
    ("web page|page content|html", "Web and network data", "Web page content"),
    ("image|photo|video|audio", "Web and network data", "Multimedia data"),
    ("database", "Web and network data", "Database information"),
    ("text message|chat message|message", "Message", "Text messages"),
    ("feedback|review|rating", "Message", "User feedback"),
    ("interaction|conversation|chat context|user input", "App usage data", "User interaction data"),
    ("format of the response|response format|response fields|fields to include|format", "App usage data", "Response fields"),
    ("session", "App usage data", "Current session setting"),
    ("subscription", "App usage data", "Subscription information"),
    ("diagnostics|telemetry", "App usage data", "Diagnostics"),
    ("version", "App metadata", "Name or version"),
    ("description of the gpt|tool description|function description", "App metadata", "Function description"),
    ("integrated|integration|connected app", "App metadata", "Integrated applications"),
    ("file name|filename", "Files and documents", "File name"),
    ("file path", "Files and documents", "File path"),
    ("file type|mime", "Files and documents", "File type"),
    ("file size", "Files and documents", "File size"),
    ("file content|document content|file", "Files and documents", "File content"),
    ("ticker", "Market data", "Ticker symbol"),
    ("currency|exchange rate", "Market data", "Currency information"),
    ("company", "E-commerce data", "Company information"),
    ("product", "E-commerce data", "Product details"),
    ("parcel|package dimensions", "E-commerce data", "Parcel dimensions"),
    ("income|salary", "Finance information", "Income information"),
    ("loan|mortgage", "Finance information", "Loans"),
    ("purchase", "Finance information", "Purchase history"),
    ("insurance", "Finance information", "Insurance"),
    ("weather", "Weather information", "Weather data parameters"),
    ("recipe", "Food and nutrition information", "Recipes"),
    ("ingredient|dietary|diet|cuisine", "Food and nutrition information", "Food type filters"),
    ("nutrient|calorie", "Food and nutrition information", "Nutrients"),
    ("meal plan", "Food and nutrition information", "Meal planning"),
    ("passenger", "Travel information", "Passenger counts"),
    ("baggage|luggage", "Travel information", "Baggage information"),
    ("cabin", "Travel information", "Cabin preferences"),
    ("vehicle", "Vehicle information", "Vehicle specifications"),
    ("property", "Real estate data", "Property details"),
    ("amenit", "Real estate data", "Amenities"),
    ("player", "Gaming data", "Player statistics"),
    ("game", "Gaming data", "In-game data"),
    ("legal", "Legal and law enforcement data", "Legal inquiries"),
    ("event", "Event information", "Event name"),
    ("reminder", "Event information", "Reminders"),
    ("team", "Sports information", "Teams"),
    ("league", "Sports information", "Leagues"),
    ("name", "Personal information", "Name"),
    ("age", "Personal information", "Age"),
]


class MockBackend:
    """Deterministic heuristic responder for every prompt kind we emit."""

    deterministic = True
    identity = "mock"

    def __init__(self, taxonomy: Taxonomy) -> None:
        self._taxonomy = taxonomy
        self._rules: list[tuple[re.Pattern[str], str, str]] = []
        for phrases, category, data_type in _CLASSIFY_RULES:
            if taxonomy.lookup(category, data_type) is None:
                raise ValueError(f"mock rule targets unknown label ({category}, {data_type})")
            alternatives = "|".join(re.escape(p) for p in phrases.split("|"))
            self._rules.append(
                (re.compile(rf"\b(?:{alternatives})\b", re.IGNORECASE), category, data_type)
            )

    def complete(self, prompt: str) -> str:
        payload = parse_input_block(prompt)
        task = payload.get("task")
        if task == "classify":
            return self._classify(payload)
        if task == "propose":
            return self._propose(payload)
        if task == "collection_statements":
            return self._collection_statements(payload)
        if task == "disclosure":
            return self._disclosure(payload)
        raise BackendUnavailable(f"mock backend cannot handle task {task!r}")

    def classify_text(self, text: str) -> tuple[str, str]:
        for pattern, category, data_type in self._rules:
            if pattern.search(text):
                return category, data_type
        return OTHER, OTHER

    def _classify(self, payload: dict) -> str:
        text = f"{payload.get('name', '')} {payload.get('description', '')}"
        category, data_type = self.classify_text(text)
        return json.dumps(
            {"entity_id": payload.get("entity_id"), "category": category, "data_type": data_type},
            ensure_ascii=False,
        )

    def _propose(self, payload: dict) -> str:
        existing = {
            dt.name.lower(): (cat.name, dt.name)
            for cat in self._taxonomy.categories
            for dt in cat.data_types
        }
        decisions = []
        for item in payload.get("entities", []):
            text = str(item.get("text", "")).lower()
            count = int(item.get("count", 0))
            covered = next((v for k, v in existing.items() if k in text), None)
            if covered is not None:
                decisions.append(
                    {"decision": "Covered", "category": covered[0], "data_type": covered[1]}
                )
            elif count >= 3:
                words = re.findall(r"[a-z]+", text)[:2]
                decisions.append(
                    {"decision": "Add", "category": None, "data_type": " ".join(words).capitalize() or "New type"}
                )
            elif count == 2:
                decisions.append({"decision": "Combine", "category": None, "data_type": "Combined type"})
            else:
                decisions.append({"decision": "Deprecate", "category": None, "data_type": None})
        return json.dumps({"decisions": decisions}, ensure_ascii=False)

    def _collection_statements(self, payload: dict) -> str:
        from gptaudit.policy.baseline import is_collection_sentence

        related = [
            int(item["index"])
            for item in payload.get("sentences", [])
            if is_collection_sentence(str(item.get("text", "")))
        ]
        return json.dumps({"collection_related": related})

    def _disclosure(self, payload: dict) -> str:
        from gptaudit.policy.baseline import label_statements

        entity = payload.get("entity", {})
        statements = payload.get("statements", [])
        labels = label_statements(
            name=str(entity.get("name", "")),
            description=str(entity.get("description", "")),
            data_type=str(entity.get("data_type", "")),
            statements=[str(item.get("text", "")) for item in statements],
        )
        return json.dumps(
            {
                "entity_id": entity.get("entity_id"),
                "labels": [
                    {"sentence_index": int(item["index"]), "label": label}
                    for item, label in zip(statements, labels)
                ],
            }
        )


class HttpChatBackend:
    """OpenAI-style chat-completions client; network-gated, non-deterministic."""

    deterministic = False

    def __init__(
        self,
        model: str,
        base_url: str = "https://api.openai.com/v1",
        api_key: str | None = None,
        timeout: float = 60.0,
    ) -> None:
        self.model = model
        self.base_url = base_url.rstrip("/")
        self.api_key = api_key
        self.timeout = timeout
        self.identity = f"{model}@{self.base_url}"

    def complete(self, prompt: str) -> str:
        import httpx

        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        body = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": 0,
        }
        try:
            response = httpx.post(
                f"{self.base_url}/chat/completions",
                json=body,
                headers=headers,
                timeout=self.timeout,
            )
            response.raise_for_status()
            data = response.json()
            return data["choices"][0]["message"]["content"]
        except Exception as exc:  # transport and shape failures alike
            raise BackendUnavailable(str(exc)) from exc

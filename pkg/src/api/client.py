"""
Low-level HTTP client for the remote inference server.

Every backend role that is served remotely posts to the same endpoint with a
``{"task", "inputs", "config"}`` body. This module owns the session, maps
HTTP failures onto the pipeline's exception types and retries transport
failures with exponential backoff.
"""

import asyncio
import json
import logging
from typing import Any, Dict, Optional
from urllib.parse import urljoin

import aiohttp

from src.api.auth import InferenceAuth
from src.config.config import config
from src.exceptions import BackendError, TransportError, create_backend_exception
from src.models.constants import INFERENCE_ENDPOINT

logger = logging.getLogger(__name__)


class InferenceClient:
    """
    Async HTTP client for inference server communication.

    This class handles:
    - HTTP request/response lifecycle
    - Authentication via InferenceAuth
    - Error handling and exception mapping
    - Retries with exponential backoff on transport failures

    Safe to share between concurrent generation tasks.
    """

    def __init__(
        self,
        base_url: Optional[str] = None,
        timeout: Optional[float] = None,
        retries: Optional[int] = None,
        backoff: Optional[float] = None,
        auth: Optional[InferenceAuth] = None,
        session: Optional[aiohttp.ClientSession] = None,
    ):
        """
        Initialize the inference client.

        Args:
            base_url: Server root (defaults to SALESBOT_INFERENCE_URL)
            timeout: Total request timeout in seconds
            retries: Extra attempts after the first on transport failure
            backoff: Base delay; attempt k waits backoff * 2**k seconds
            auth: Credentials provider
            session: Optional existing aiohttp session to reuse
        """
        self.base_url = base_url or config.SALESBOT_INFERENCE_URL
        self.timeout = config.SALESBOT_INFERENCE_TIMEOUT if timeout is None else timeout
        self.retries = config.SALESBOT_INFERENCE_RETRIES if retries is None else retries
        self.backoff = config.SALESBOT_INFERENCE_BACKOFF if backoff is None else backoff
        self.auth = auth or InferenceAuth()
        self._session = session
        self._owned_session = session is None

        if not self.base_url.endswith('/'):
            self.base_url += '/'

    async def __aenter__(self) -> "InferenceClient":
        _ = self.session
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        await self.close()

    @property
    def session(self) -> aiohttp.ClientSession:
        """Get or create the HTTP session."""
        if self._session is None:
            connector = aiohttp.TCPConnector(enable_cleanup_closed=True)
            self._session = aiohttp.ClientSession(
                connector=connector,
                timeout=aiohttp.ClientTimeout(total=self.timeout)
            )
        return self._session

    async def close(self):
        """Close the HTTP session if we own it."""
        if self._owned_session and self._session:
            await self._session.close()
            self._session = None

    def _build_url(self, endpoint: str) -> str:
        if endpoint.startswith('/'):
            endpoint = endpoint[1:]
        return urljoin(self.base_url, endpoint)

    def _handle_response_error(self, status_code: int, response_text: str, url: str) -> None:
        """Raise the exception matching an HTTP error response."""
        message = None
        try:
            error_data = json.loads(response_text)
            if isinstance(error_data, dict):
                message = error_data.get("error") or error_data.get("message")
        except (json.JSONDecodeError, TypeError):
            pass

        raise create_backend_exception(status_code, response_text, endpoint=url, message=message)

    async def _post_once(self, url: str, body: Dict[str, Any]) -> Dict[str, Any]:
        try:
            async with self.session.post(url, json=body, headers=self.auth.get_headers()) as response:
                response_text = await response.text()

                if not response.ok:
                    self._handle_response_error(response.status, response_text, url)

                try:
                    return json.loads(response_text)
                except json.JSONDecodeError as e:
                    raise BackendError(
                        f"Invalid JSON response from {url}: {str(e)}",
                        status_code=response.status,
                        response_body=response_text,
                        endpoint=url
                    )

        except aiohttp.ClientError as e:
            raise TransportError(f"Network error communicating with {url}: {str(e)}", endpoint=url)
        except asyncio.TimeoutError:
            raise TransportError(f"Request to {url} timed out after {self.timeout} seconds", endpoint=url)

    async def post(self, body: Dict[str, Any], endpoint: str = INFERENCE_ENDPOINT) -> Dict[str, Any]:
        """
        POST a JSON body, retrying transport failures.

        Returns:
            Parsed JSON response

        Raises:
            TransportError: Endpoint unreachable after all attempts
            BackendError: Non-retryable server response
            PreconditionError: Request rejected as malformed (4xx)
        """
        url = self._build_url(endpoint)
        attempts = self.retries + 1
        last_error: Optional[TransportError] = None

        for attempt in range(attempts):
            try:
                return await self._post_once(url, body)
            except TransportError as e:
                last_error = e
                if attempt + 1 < attempts:
                    delay = self.backoff * 2 ** attempt
                    logger.warning(f"Inference attempt {attempt + 1}/{attempts} failed ({e.message}); retrying in {delay:.2f}s")
                    await asyncio.sleep(delay)

        raise TransportError.unreachable(url, attempts, last_error.message if last_error else "unknown")
